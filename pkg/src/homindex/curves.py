"""Curve germs given with branch parametrizations: pullbacks of forms, the
radial index, and the torsion of Omega^1 by truncated linear algebra."""

from dataclasses import dataclass
from fractions import Fraction

from .differentials import OneForm, kaehler_presentation
from .errors import (GermSemanticError, NotStabilizedError, PreconditionError,
                     UndeterminedOrderError)
from .exactalg import TruncatedSeries, monomials_of_degree, monomials_up_to, series_compose, series_order, upoly_trim
from .linalg import Echelon

START_PRECISION = 16
MAX_PRECISION = 256


class CurveParametrization:
    """r branches t -> (phi_1(t), ..., phi_N(t)), each phi_j a polynomial in t.

    Branch components are coefficient tuples, lowest degree first.  They are
    exact polynomials; ``series`` truncates them to any requested precision.
    """

    def __init__(self, ring, branches):
        self.ring = ring
        self.branches = []
        for b in branches:
            b = [upoly_trim(Fraction(c) for c in comp) for comp in b]
            if len(b) != ring.nvars:
                raise GermSemanticError(f"branch has {len(b)} components, ring has {ring.nvars} variables")
            if any(comp and comp[0] for comp in b):
                raise GermSemanticError("branch does not pass through the origin")
            if not any(b):
                raise GermSemanticError("constant branch")
            self.branches.append(tuple(b))
        if len(set(self.branches)) != len(self.branches):
            raise GermSemanticError("repeated branch")

    @property
    def r(self):
        return len(self.branches)

    def __len__(self):
        return len(self.branches)

    def __eq__(self, other):
        return (isinstance(other, CurveParametrization) and self.ring == other.ring
                and self.branches == other.branches)

    __hash__ = None

    def series(self, i, precision):
        return [TruncatedSeries(comp or (0,), precision) for comp in self.branches[i]]

    def multiplicity(self, i):
        """Order of the branch: the least order of its components."""
        return min(series_order(TruncatedSeries(c, len(c))) for c in self.branches[i] if c)

    def check(self, equations, precision=START_PRECISION):
        for i in range(self.r):
            s = self.series(i, precision)
            for f in equations:
                if not series_compose(f, s).is_zero():
                    raise GermSemanticError(
                        f"branch {i + 1} does not satisfy {f} to precision {precision}")

    def reparametrize(self, i, unit):
        """Replace t by t*u(t) on branch i (u given as coefficients, u(0) != 0)."""
        if not unit or not unit[0]:
            raise PreconditionError("reparametrization factor must be a unit")
        sub = (Fraction(0),) + tuple(Fraction(c) for c in unit)
        new = []
        for comp in self.branches[i]:
            acc = ()
            power = (Fraction(1),)
            for c in comp:
                if c:
                    acc = _uadd(acc, tuple(c * v for v in power))
                power = _umul(power, sub)
            new.append(acc)
        branches = list(self.branches)
        branches[i] = tuple(new)
        return CurveParametrization(self.ring, branches)


def _uadd(a, b):
    n = max(len(a), len(b))
    return upoly_trim((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n))


def _umul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return upoly_trim(out)


@dataclass
class BranchPullback:
    series: TruncatedSeries
    order: int

    @property
    def leading_coefficient(self):
        return self.series.coeffs[self.order]


def pullback_form(omega, branch):
    """Coefficient of dt in omega restricted to one branch.

    ``branch`` is a list of TruncatedSeries of common precision D; the
    result has precision D - 1.  Raises UndeterminedOrderError when the
    pullback vanishes to that precision.
    """
    total = None
    for a, phi in zip(omega.coefficients, branch):
        if not a:
            continue
        term = series_compose(a, branch) * phi.derivative()
        total = term if total is None else total + term
    if total is None:
        total = TruncatedSeries([0], branch[0].precision - 1)
    m = series_order(total)
    if m is None:
        raise UndeterminedOrderError(
            f"form pulls back to zero through order {total.precision}")
    return BranchPullback(total, m)


def branch_orders(omega, param, precision=START_PRECISION, max_precision=MAX_PRECISION):
    """Pullback orders m_i, doubling the precision on undetermined branches."""
    orders = []
    for i in range(param.r):
        d = precision
        while True:
            try:
                orders.append(pullback_form(omega, param.series(i, d)).order)
                break
            except UndeterminedOrderError:
                if d >= max_precision:
                    raise UndeterminedOrderError(
                        f"form vanishes on branch {i + 1} through order {d}: "
                        "no isolated singularity") from None
                d *= 2
    return orders


def radial_index_curve(omega, param, precision=START_PRECISION, max_precision=MAX_PRECISION):
    """sum of the branch pullback orders, plus r - 1."""
    orders = branch_orders(omega, param, precision, max_precision)
    return sum(orders) + len(orders) - 1


# ---------------------------------------------------------------------------
# truncated Omega^1


class TruncatedOmega1:
    """Omega^1_{C,0} / m^(B+1) Omega^1 as explicit linear algebra.

    Columns are pairs (exponents, j) standing for x^a dx_j with |a| <= B.
    ``relation_echelon`` spans the truncated relation submodule.
    """

    def __init__(self, C, bound):
        self.C = C
        self.bound = bound
        N = C.nvars
        self.monomials = monomials_up_to(N, bound)
        self.columns = [(e, j) for e in self.monomials for j in range(N)]
        self.index = {c: k for k, c in enumerate(self.columns)}
        pres = kaehler_presentation(C, 1)
        self.relations = pres.relations
        self.relation_echelon = Echelon()
        for rel in pres.relations:
            low = min(p.low_degree() for p in rel if p)
            for beta in monomials_up_to(N, bound - low):
                self.relation_echelon.add(self.shifted(rel, beta))

    @property
    def dim(self):
        return len(self.columns)

    def shifted(self, vec, beta):
        """x^beta * vec, truncated to total degree <= bound, as a sparse row."""
        row = {}
        B = self.bound
        for j, p in enumerate(vec):
            for e, c in p.terms.items():
                f = tuple(a + b for a, b in zip(e, beta))
                if sum(f) <= B:
                    k = self.index[(f, j)]
                    row[k] = row.get(k, 0) + c
        return {k: v for k, v in row.items() if v}


def _branch_power_table(series_list, max_exp):
    out = []
    for s in series_list:
        powers = [TruncatedSeries([1], s.precision)]
        for _ in range(max_exp):
            powers.append(powers[-1] * s)
        out.append(powers)
    return out


class _Pullback:
    """Evaluates x^a dx_j on all branches modulo t^D, with cached powers."""

    def __init__(self, param, D, max_exp):
        self.D = D
        self.r = param.r
        self.series = [param.series(i, D) for i in range(param.r)]
        self.derivs = [[s.derivative() for s in br] for br in self.series]
        self.powers = [_branch_power_table(br, max_exp) for br in self.series]
        self.orders = [[series_order(s) for s in br] for br in self.series]

    def min_order(self, e):
        """Lower bound over branches for the order of x^e."""
        best = None
        for ords in self.orders:
            o = 0
            for a, oj in zip(e, ords):
                if a:
                    if oj is None:
                        o = self.D
                        break
                    o += a * oj
            best = o if best is None else min(best, o)
        return best

    def row(self, e, j):
        row = {}
        D = self.D
        for i in range(self.r):
            acc = None
            for var, a in enumerate(e):
                if a:
                    p = self.powers[i][var][a]
                    acc = p if acc is None else acc * p
            d = self.derivs[i][j]
            acc = d if acc is None else acc * d
            for k, c in enumerate(acc.coeffs):
                if c:
                    row[i * D + k] = c
        return row


def torsion_dimension_at(C, param, bound, precision=None):
    """dim of the kernel of Omega^1/m^(B+1) -> (branch series)/pullback(m^(B+1) Omega^1)."""
    trunc = TruncatedOmega1(C, bound)
    E = max(param.multiplicity(i) for i in range(param.r))
    D = precision or 3 * (bound + 2) * E + 2
    N = C.nvars
    pb = _Pullback(param, D, D)
    tail = Echelon()
    for deg in range(bound + 1, D):
        for e in monomials_of_degree(N, deg):
            if pb.min_order(e) >= D:
                continue
            for j in range(N):
                tail.add(pb.row(e, j))
    rank_map = 0
    for e, j in trunc.columns:
        if tail.add(pb.row(e, j)):
            rank_map += 1
    kernel = trunc.dim - rank_map
    return kernel - trunc.relation_echelon.rank


def torsion_tau(C, param, bound=12, start=None):
    """dim Ker(Omega^1_{C,0} -> Omega^1 of the normalization).

    The truncated count is evaluated for increasing bounds B and returned
    once two consecutive bounds agree.
    """
    if C.dim != 1:
        raise PreconditionError("torsion_tau needs a curve")
    if not C.reduced:
        raise PreconditionError("torsion_tau needs a reduced curve")
    start = start if start is not None else max([f.degree() for f in C.equations] + [1])
    prev = None
    for B in range(start, bound + 1):
        cur = torsion_dimension_at(C, param, B)
        if cur == prev:
            return cur
        prev = cur
    raise NotStabilizedError(f"torsion dimension did not stabilize by bound {bound}")
