"""Vector-space dimensions read off leading modules, and Hilbert-Poincare
series of graded presentations."""

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonHomogeneousError, NonPolynomialEulerError, NotAStandardBasisError, ResourceLimitError
from .exactalg import RationalFunction, upoly_mul, upoly_add, upoly_neg, upoly_shift, upoly_trim
from .orders import ModuleOrder, MonomialOrder
from .stdbasis import Submodule, leading_module, standard_basis

INFINITE = math.inf

DEFAULT_PREFIX = 10


def _require_basis(G):
    if not getattr(G, "completed", False):
        raise NotAStandardBasisError("expected a completed standard basis")


def _components(G):
    lm = leading_module(G)
    per = [[] for _ in range(G.rank)]
    for e, comp in lm:
        per[comp].append(e)
    return per


def _is_artinian(gens, nvars):
    """Does the monomial ideal contain a pure power of every variable?"""
    if any(not any(e) for e in gens):
        return True
    for j in range(nvars):
        if not any(e[j] and all(a == 0 for k, a in enumerate(e) if k != j) for e in gens):
            return False
    return True


def _staircase(gens, nvars, cap):
    """Monomials outside the monomial ideal, by breadth-first search from 1."""
    def standard(e):
        return not any(all(a <= b for a, b in zip(g, e)) for g in gens)

    start = (0,) * nvars
    if not standard(start):
        return []
    seen = {start}
    queue = deque([start])
    out = []
    while queue:
        e = queue.popleft()
        out.append(e)
        if len(out) > cap:
            raise ResourceLimitError(f"more than {cap} standard monomials")
        for j in range(nvars):
            f = e[:j] + (e[j] + 1,) + e[j + 1:]
            if f not in seen and standard(f):
                seen.add(f)
                queue.append(f)
    return out


def quotient_dimension(G, cap=1_000_000):
    """dim_Q of F/G computed from the leading module of a standard basis;
    ``INFINITE`` when some component has infinitely many standard monomials."""
    _require_basis(G)
    n = G.ring.nvars
    total = 0
    for gens in _components(G):
        if not _is_artinian(gens, n):
            return INFINITE
        total += len(_staircase(gens, n, cap))
    return total


def standard_monomials(G, cap=10_000):
    """Explicit monomial basis ``[(exponents, component), ...]`` of the quotient."""
    _require_basis(G)
    n = G.ring.nvars
    out = []
    for comp, gens in enumerate(_components(G)):
        if not _is_artinian(gens, n):
            raise ResourceLimitError(f"component {comp} has infinitely many standard monomials")
        out.extend((e, comp) for e in _staircase(gens, n, cap - len(out)))
    return sorted(out, key=lambda m: (m[1], G.order.base.key(m[0])))


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _wdeg(e, weights):
    return sum(w * a for w, a in zip(weights, e))


def hilbert_numerator(gens, weights):
    """K(t) with H(S/J) = K(t) / prod(1 - t^w_i) for the monomial ideal J.

    Uses the splitting H(J' + (m)) = H(J') - t^deg(m) H(J' : m).
    """
    gens = _minimalize(gens)
    return _hn(tuple(gens), tuple(weights))


def _hn(gens, weights):
    if not gens:
        return (Fraction(1),)
    if any(not any(g) for g in gens):
        return ()
    # pairwise coprime generators: product formula
    support = [frozenset(j for j, a in enumerate(g) if a) for g in gens]
    if all(not (support[i] & support[j]) for i in range(len(gens)) for j in range(i)):
        result = (Fraction(1),)
        for g in gens:
            result = upoly_mul(result, upoly_add((Fraction(1),), upoly_neg(upoly_shift((Fraction(1),), _wdeg(g, weights)))))
        return result
    # pivot on the generator of largest degree
    m = max(gens, key=lambda g: (sum(g), g))
    rest = tuple(g for g in gens if g != m)
    colon = _minimalize(tuple(max(a - b, 0) for a, b in zip(g, m)) for g in rest)
    return upoly_add(_hn(rest, weights), upoly_neg(upoly_shift(_hn(tuple(colon), weights), _wdeg(m, weights))))


def _denominator(weights):
    d = (Fraction(1),)
    for w in weights:
        d = upoly_mul(d, upoly_add((Fraction(1),), upoly_neg(upoly_shift((Fraction(1),), w))))
    return d


# ---------------------------------------------------------------------------
# graded presentations


@dataclass
class GradedPresentation:
    """Quotient of a graded free module by homogeneous relations.

    ``degrees[c]`` is the degree of the c-th free generator; ``relations``
    are tuples of polynomials of length ``rank``; ``weights`` grade the
    variables.
    """

    ring: object
    degrees: tuple
    relations: list
    weights: tuple

    @property
    def rank(self):
        return len(self.degrees)

    def check_homogeneous(self):
        for k, rel in enumerate(self.relations):
            degs = set()
            for comp, p in enumerate(rel):
                for e in p.terms:
                    degs.add(_wdeg(e, self.weights) + self.degrees[comp])
            if len(degs) > 1:
                raise NonHomogeneousError(
                    f"relation {k} is not homogeneous (term degrees {sorted(degs)}): "
                    f"{tuple(str(p) for p in rel)}")


@dataclass
class PoincareSeriesResult:
    series: RationalFunction
    prefix: list

    def __iter__(self):
        return iter(self.prefix)


def poincare_series(M, weights=None, prefix_length=DEFAULT_PREFIX, return_basis=False):
    """Hilbert-Poincare series of the graded module ``M``.

    Homogeneity is checked first; the standard basis is taken under the
    weighted degree-reverse-lexicographic term-over-position order with the
    generator degrees as shifts.
    """
    weights = tuple(weights or M.weights)
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    M = GradedPresentation(M.ring, tuple(M.degrees), list(M.relations), weights)
    M.check_homogeneous()
    if min(M.degrees, default=0) < 0:
        raise ValueError("negative generator degrees are not supported")
    order = ModuleOrder(MonomialOrder("wdegrevlex", weights), "top", M.degrees)
    sb = standard_basis(Submodule(M.rank, M.relations, order, ring=M.ring))
    num = ()
    for comp, gens in enumerate(_components(sb)):
        num = upoly_add(num, upoly_shift(hilbert_numerator(gens, weights), M.degrees[comp]))
    series = RationalFunction(num, _denominator(weights))
    result = PoincareSeriesResult(series, [int(c) for c in series.series(prefix_length)])
    if return_basis:
        return result, sb
    return result


def alternating_euler(series, twist=None):
    """Evaluate sum_i (-1)^i t^twist[i] P_i(t) at t = 1.

    The alternating sum must collapse to a (Laurent) polynomial; otherwise
    :class:`NonPolynomialEulerError` is raised.
    """
    series = [s.series if isinstance(s, PoincareSeriesResult) else s for s in series]
    twist = list(twist) if twist is not None else [0] * len(series)
    if len(twist) != len(series):
        raise ValueError("one twist per series")
    low = min(twist, default=0)
    total = RationalFunction(())
    for i, (p, k) in enumerate(zip(series, twist)):
        term = p.shift(k - low)
        total = total + (term if i % 2 == 0 else -term)
    if not total.is_polynomial():
        raise NonPolynomialEulerError(
            "alternating sum of Poincare series is not a polynomial: the form does not have "
            "finite-dimensional homology on this germ, or the grading is incompatible")
    value = sum(total.num, Fraction(0)) / total.den[0]
    assert value.denominator == 1
    return int(value)
