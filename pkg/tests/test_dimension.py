import pytest
import sympy
from hypothesis import given, strategies as st

from homindex.dimension import (INFINITE, GradedPresentation, alternating_euler, hilbert_numerator,
                                poincare_series, quotient_dimension, standard_monomials)
from homindex.errors import NonHomogeneousError, NonPolynomialEulerError, NotAStandardBasisError
from homindex.exactalg import PolyRing, RationalFunction
from homindex.orders import MonomialOrder
from homindex.stdbasis import Submodule, standard_basis

from oracles import graded_dimensions, to_sympy

R = PolyRing(["x", "y"])
x, y = R.gens()
LOCAL = MonomialOrder("local")

P0 = [1, 5, 9, 13, 17, 21, 25, 29, 33, 37]
P1 = [5, 19, 24, 32, 40, 48, 56, 64, 72, 80]
P2 = [10, 21, 15, 19, 23, 27, 31, 35, 39, 43]


def sb(gens, order=LOCAL, ring=R):
    return standard_basis(Submodule(1, gens, order, ring=ring))


def test_quotient_dimension_examples():
    assert quotient_dimension(sb([x**3 - y**2, 3 * x**2 + 2 * y])) == 3
    assert quotient_dimension(sb([x * y, y - x])) == 2
    S = PolyRing(["x"])
    assert quotient_dimension(standard_basis(Submodule(1, [], LOCAL, ring=S))) == INFINITE
    assert quotient_dimension(sb([x * y])) == INFINITE
    with pytest.raises(NotAStandardBasisError):
        quotient_dimension(Submodule(1, [x], LOCAL))


def test_standard_monomials_examples():
    assert sorted(standard_monomials(sb([x**3 - y**2, 3 * x**2 + 2 * y]))) == [((0, 0), 0), ((1, 0), 0), ((2, 0), 0)]
    assert standard_monomials(sb([x, y])) == [((0, 0), 0)]
    assert sorted(standard_monomials(sb([x**2, x * y, y**2]))) == [((0, 0), 0), ((0, 1), 0), ((1, 0), 0)]


def pinkham_series():
    from conftest import load
    from homindex.indices import graded_complex_series
    germ, _, _ = load("pinkham_cone")
    return graded_complex_series(germ)


def test_pinkham_series_match():
    series = pinkham_series()
    assert [s.prefix for s in series] == [P0, P1, P2]
    assert alternating_euler(series) == 13
    assert alternating_euler(series, (0, 1, 2)) == 11


def test_alternating_euler_needs_polynomial():
    with pytest.raises(NonPolynomialEulerError):
        alternating_euler([RationalFunction((1,), (1, -1))])


def test_non_homogeneous_rejected():
    M = GradedPresentation(R, (0,), [(x**2 + y,)], (1, 1))
    with pytest.raises(NonHomogeneousError):
        poincare_series(M)


exps = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


@given(gens=st.lists(exps, min_size=1, max_size=5), w=st.tuples(*[st.integers(1, 3)] * 3))
def test_hilbert_numerator_permutation_invariant(gens, w):
    base = hilbert_numerator(gens, w)
    for perm in [(1, 0, 2), (2, 1, 0), (1, 2, 0)]:
        pg = [tuple(e[p] for p in perm) for e in gens]
        pw = tuple(w[p] for p in perm)
        assert hilbert_numerator(pg, pw) == base
    assert hilbert_numerator(list(reversed(gens)), w) == base


@given(gens=st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=4),
       w=st.tuples(*[st.integers(1, 2)] * 3))
def test_monomial_prefix_matches_count(gens, w):
    S = PolyRing(["a", "b", "c"])
    M = GradedPresentation(S, (0,), [(S.monomial(e),) for e in gens], w)
    res = poincare_series(M, prefix_length=6)
    count = [0] * 6
    for a in range(7):
        for b in range(7):
            for c in range(7):
                d = a * w[0] + b * w[1] + c * w[2]
                if d < 6 and not any(all(p >= q for p, q in zip((a, b, c), g)) for g in gens):
                    count[d] += 1
    assert res.prefix == count


def test_module_prefix_matches_linear_algebra():
    S = PolyRing(["x", "y", "z"])
    a, b, c = S.gens()
    rels = [(b, -a, S.zero()), (S.zero(), c, -b), (a**2, S.zero(), c**2 - a * b)]
    degrees = (0, 0, 0)
    M = GradedPresentation(S, degrees, rels, (1, 1, 1))
    res = poincare_series(M, prefix_length=6)
    syms = sympy.symbols("x y z")
    expected = graded_dimensions([tuple(to_sympy(p, syms) for p in r) for r in rels], degrees, (1, 1, 1), syms, 5)
    assert res.prefix == expected


def test_weighted_cusp_ring():
    M = GradedPresentation(R, (0,), [(x**3 - y**2,)], (2, 3))
    res = poincare_series(M, prefix_length=8)
    assert res.prefix == [1, 0, 1, 1, 1, 1, 1, 1]
