from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from homindex.errors import PoleError, PrecisionMismatchError
from homindex.exactalg import (PolyRing, RationalFunction, TruncatedSeries, det, monomials_of_degree,
                               monomials_up_to, partial_derivative, poly_mul, ratfun_eval,
                               series_compose, series_order, upoly_gcd, upoly_mul)
from homindex.germfile import parse_polynomial

R = PolyRing(["x", "y"])
x, y = R.gens()

coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coeffs, max_size=5).map(
    lambda d: R.zero() + sum((R.monomial(e, c) for e, c in d.items()), R.zero()))


def test_poly_mul_examples():
    assert poly_mul(x + y, x - y) == x**2 - y**2
    p = x**3 - y**2
    assert poly_mul(R.one(), p) == p
    assert poly_mul(p, 3 * x**2) == 3 * x**5 - 3 * x**2 * y**2


def test_partial_derivative_examples():
    p = x**3 - y**2
    assert partial_derivative(p, 0) == 3 * x**2
    assert partial_derivative(p, 1) == -2 * y
    assert partial_derivative(R.const(7), 0) == R.zero()


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == R.zero()
    assert a * R.one() == a


@given(polys, polys)
def test_leibniz_rule(a, b):
    for j in range(2):
        assert (a * b).diff(j) == a.diff(j) * b + a * b.diff(j)


@given(polys)
def test_str_reparses(p):
    assert parse_polynomial(str(p), R) == p


def test_polynomial_queries():
    p = x**3 - y**2 + 2
    assert p.degree() == 3
    assert p.low_degree() == 0
    assert p.constant_coefficient() == 2
    assert (x**3 - y**2).is_homogeneous((2, 3))
    assert not (x**3 - y**2).is_homogeneous((1, 1))
    assert p.evaluate([Fraction(1), Fraction(2)]) == -1


def test_context_mismatch():
    S = PolyRing(["x", "z"])
    with pytest.raises(Exception):
        x + S.gen(0)


def test_series_compose_examples():
    br = [TruncatedSeries([0, 0, 1], 8), TruncatedSeries([0, 0, 0, 1], 8)]
    assert series_compose(y**2 - x**3, br).is_zero()
    assert series_compose(x, br) == TruncatedSeries([0, 0, 1], 8)
    br5 = [TruncatedSeries([0, 0, 1], 5), TruncatedSeries([0, 0, 0, 1], 5)]
    assert series_compose(x + y, br5) == TruncatedSeries([0, 0, 1, 1], 5)


def test_series_order_examples():
    assert series_order(TruncatedSeries([0, 0, 1, 1], 5)) == 2
    assert series_order(TruncatedSeries([3, 1], 5)) == 0
    assert series_order(TruncatedSeries([], 6)) is None


def test_series_precision_rules():
    a = TruncatedSeries([1, 2, 3], 6)
    b = TruncatedSeries([1, 1], 3)
    assert (a * b).precision == 3
    assert a.derivative().precision == 5
    with pytest.raises(PrecisionMismatchError):
        series_compose(x, [TruncatedSeries([0, 1], 4), TruncatedSeries([0, 1], 5)])


series_coeffs = st.lists(st.integers(-5, 5), min_size=1, max_size=4)


@given(polys, polys, series_coeffs, series_coeffs)
def test_compose_is_a_ring_homomorphism(a, b, s1, s2):
    br = [TruncatedSeries([0] + s1, 7), TruncatedSeries([0] + s2, 7)]
    assert series_compose(a * b, br) == series_compose(a, br) * series_compose(b, br)
    assert series_compose(a + b, br) == series_compose(a, br) + series_compose(b, br)


def test_ratfun_examples():
    f = RationalFunction((1, 0, -1), (1, -1))
    assert f.is_polynomial()
    assert ratfun_eval(f, 1) == 2
    assert ratfun_eval(RationalFunction((13,)), 1) == 13
    with pytest.raises(PoleError):
        ratfun_eval(RationalFunction((1,), (1, -1)), 1)


def test_ratfun_series_and_arithmetic():
    geo = RationalFunction((1,), (1, -1))
    assert geo.series(5) == [1] * 5
    sq = geo * geo
    assert sq.series(5) == [1, 2, 3, 4, 5]
    assert (sq - geo).series(4) == [0, 1, 2, 3]
    assert geo.shift(2).series(4) == [0, 0, 1, 1]


def test_upoly_gcd():
    a = upoly_mul((1, 1), (2, 0, 1))
    b = upoly_mul((1, 1), (3, 1))
    g = upoly_gcd(a, b)
    assert len(g) == 2 and g[1] / g[0] == 1


def test_det_and_monomials():
    assert det([[1, 2], [3, 4]]) == -2
    assert det([[2, 0, 0], [0, 3, 0], [1, 1, 5]]) == 30
    assert len(monomials_up_to(3, 2)) == 10
    assert len(monomials_of_degree(3, 2)) == 6
