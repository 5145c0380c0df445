import pytest
import sympy
from hypothesis import given, strategies as st

from homindex.differentials import (OneForm, VarietyGerm, expected_relation_count, kaehler_presentation,
                                    matmul, minors_ideal, wedge_matrix)
from homindex.errors import NonHomogeneousError, PreconditionError
from homindex.exactalg import PolyRing

from conftest import load
from oracles import minors_generators, to_sympy

R = PolyRing(["x", "y"])
x, y = R.gens()
a, b = 3, -5
cusp = VarietyGerm(R, [x**3 - y**2], 1, icis=True)


def test_cusp_presentation():
    pres = kaehler_presentation(cusp, 1)
    assert pres.basis == [(0,), (1,)]
    f = x**3 - y**2
    assert pres.relations == [(f, R.zero()), (R.zero(), f), (3 * x**2, -2 * y)]
    assert len(pres.relations) == expected_relation_count(cusp, 1)


def test_smooth_presentation_is_free():
    V = VarietyGerm(R, [], 2, icis=True)
    pres = kaehler_presentation(V, 1)
    assert pres.rank == 2 and pres.relations == []


def test_pinkham_top_degree_presentation():
    germ, _, _ = load("pinkham_cone")
    pres = kaehler_presentation(germ, 2)
    assert pres.rank == 10
    assert len(pres.relations) == 6 * 10 + 6 * 5


def test_wedge_matrix_examples():
    A, B = R.const(a), R.const(b)
    omega = OneForm((A, B))
    assert wedge_matrix(omega, 0) == [[A], [B]]
    assert wedge_matrix(omega, 1) == [[-B, A]]


coef = st.lists(st.tuples(st.tuples(*[st.integers(0, 2)] * 3), st.integers(-3, 3)), max_size=3)
S = PolyRing(["x", "y", "z"])


def _poly(terms):
    return sum((S.monomial(e, c) for e, c in terms), S.const(1))


@given(st.tuples(coef, coef, coef))
def test_omega_wedge_omega_is_zero(cs):
    omega = OneForm(tuple(_poly(c) for c in cs))
    for p in range(2):
        prod = matmul(wedge_matrix(omega, p + 1), wedge_matrix(omega, p))
        assert all(not e for row in prod for e in row)


def test_minors_examples():
    A, B = R.const(a), R.const(b)
    omega = OneForm((A, B))
    assert minors_ideal(cusp, omega) == [x**3 - y**2, 3 * x**2 * B + 2 * y * A]
    node = VarietyGerm(R, [x * y], 1, icis=True)
    assert minors_ideal(node, omega) == [x * y, y * B - x * A]
    plane = VarietyGerm(R, [], 2, icis=True)
    assert minors_ideal(plane, OneForm((x, y))) == [x, y]


@pytest.mark.parametrize("name", ["a2_cusp", "e6", "d4_triple_point"])
def test_minors_match_cofactor_oracle(name):
    germ, form, _ = load(name)
    syms = sympy.symbols(germ.ring.names)
    ours = {sympy.expand(to_sympy(p, syms)) for p in minors_ideal(germ, form)}
    ref = minors_generators([to_sympy(f, syms) for f in germ.equations],
                            [to_sympy(c, syms) for c in form.coefficients], syms)
    assert ours == {r for r in ref if r != 0}


def test_space_curve_ci_minors_match_oracle():
    V = VarietyGerm(S, [S.gen(0) * S.gen(1), S.gen(2) - S.gen(0)**2 - S.gen(1)**3], 1, icis=True)
    omega = OneForm((S.const(2), S.gen(2), S.const(-1)))
    syms = sympy.symbols("x y z")
    ours = {to_sympy(p, syms) for p in minors_ideal(V, omega)}
    ref = minors_generators([to_sympy(f, syms) for f in V.equations],
                            [to_sympy(c, syms) for c in omega.coefficients], syms)
    assert {sympy.expand(p) for p in ours} == {r for r in ref if r != 0}


def test_preconditions():
    axes, form, _ = load("axes3")
    with pytest.raises(PreconditionError):
        minors_ideal(axes, form)
    with pytest.raises(NonHomogeneousError):
        VarietyGerm(R, [x**3 - y**2], 1, weights=(1, 1))
    with pytest.raises(PreconditionError):
        VarietyGerm(R, [x, y], 1, icis=True)
    with pytest.raises(PreconditionError):
        OneForm((R.zero(), R.zero()))


def test_form_degree():
    assert OneForm((R.const(1), R.const(1))).degree((1, 1)) == 0
    assert OneForm((x**2, y)).degree((2, 3)) == 5
    assert OneForm((R.const(1), R.const(1))).degree((2, 3)) is None
