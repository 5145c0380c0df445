"""Index computations on germs: the minors-ideal index, the homological index
(curve and graded routes), the radial index, nu, the torsion tau and the
classical Milnor number."""

import random
from dataclasses import dataclass, field

from .curves import TruncatedOmega1, branch_orders, radial_index_curve, torsion_tau
from .differentials import OneForm, kaehler_presentation, minors_ideal
from .dimension import INFINITE, alternating_euler, poincare_series, quotient_dimension
from .errors import GenericityError, NonIsolatedError, NotStabilizedError, PreconditionError, UndeterminedOrderError
from .exactalg import monomials_up_to
from .orders import ModuleOrder, MonomialOrder
from .stdbasis import Submodule, standard_basis

LOCAL = MonomialOrder("local")
COEFF_RANGE = 97


def local_colength(generators, ring, order=LOCAL):
    """dim of the local quotient O_{C^N,0} / (generators)."""
    sb = standard_basis(Submodule(1, generators, order, ring=ring))
    return quotient_dimension(sb)


def global_colength(generators, ring, order=None):
    """dim of Q[x]/(generators), all zeros counted."""
    sb = standard_basis(Submodule(1, generators, order or MonomialOrder("degrevlex"), ring=ring))
    return quotient_dimension(sb)


# ---------------------------------------------------------------------------
# seeded generic forms


def random_linear_form(ring, rng, low=-COEFF_RANGE, high=COEFF_RANGE):
    """d(l) for l with nonzero integer coefficients drawn from [low, high]."""
    coeffs = []
    for _ in range(ring.nvars):
        c = 0
        while c == 0:
            c = rng.randint(low, high)
        coeffs.append(ring.const(c))
    return OneForm(tuple(coeffs))


def random_nonlinear_form(ring, rng, degree=2, density=0.5):
    """A generic constant part plus random higher-order coefficients."""
    base = random_linear_form(ring, rng)
    coeffs = []
    for a in base.coefficients:
        for e in monomials_up_to(ring.nvars, degree)[1:]:
            if rng.random() < density:
                a = a + ring.monomial(e, rng.randint(-9, 9))
        coeffs.append(a)
    return OneForm(tuple(coeffs))


def generic_linear_form(ring, rng, param=None, redraws=3):
    """Draw d(l); with a parametrization, keep the draw whose branch orders
    are smallest over ``redraws`` attempts."""
    if param is None:
        return random_linear_form(ring, rng)
    best = None
    for _ in range(redraws):
        form = random_linear_form(ring, rng)
        try:
            orders = branch_orders(form, param)
        except UndeterminedOrderError:
            continue
        if best is None or sum(orders) < best[0]:
            best = (sum(orders), form)
    if best is None:
        raise GenericityError("no draw of a linear form was generic on every branch")
    return best[1]


# ---------------------------------------------------------------------------
# indices


def egz_index(V, omega, order=LOCAL):
    """dim O/I for I = (f, (k+1)-minors of [Jacobian; omega]) on an ICIS."""
    gens = minors_ideal(V, omega)
    d = local_colength(gens, V.ring, order)
    if d == INFINITE:
        raise NonIsolatedError("form does not have an isolated singularity on this germ")
    return d


def milnor_hypersurface(f, order=LOCAL):
    """Colength of the Jacobian ideal."""
    d = local_colength([f.diff(j) for j in range(f.ring.nvars)], f.ring, order)
    if d == INFINITE:
        raise NonIsolatedError(f"{f} does not have an isolated critical point")
    return d


def tjurina_hypersurface(f, order=LOCAL):
    d = local_colength([f] + [f.diff(j) for j in range(f.ring.nvars)], f.ring, order)
    if d == INFINITE:
        raise NonIsolatedError(f"{f} does not define an isolated singularity")
    return d


def _require_reduced_curve(C):
    if C.dim != 1:
        raise PreconditionError(f"{C.name} is not a curve (declared dimension {C.dim})")
    if not C.reduced:
        raise PreconditionError(f"{C.name} is not declared reduced")


def hom_index_curve(C, omega, order=LOCAL):
    """h_1 = dim Omega^1 / (omega O) on a reduced curve; h_0 vanishes there."""
    _require_reduced_curve(C)
    pres = kaehler_presentation(C, 1)
    gens = list(pres.relations) + [tuple(omega.coefficients)]
    # term-over-position keeps the order degree-compatible, which lets the
    # standard basis discard everything above the highest corner
    sb = standard_basis(Submodule(pres.rank, gens, ModuleOrder(order, "top"), ring=C.ring))
    h1 = quotient_dimension(sb)
    if h1 == INFINITE:
        raise NonIsolatedError("form does not have an isolated singularity on this curve")
    return h1


def graded_complex_series(V, prefix_length=10):
    """Poincare series of Omega^0 .. Omega^n of a weighted-homogeneous germ."""
    if V.weights is None:
        raise PreconditionError(f"{V.name} carries no weights")
    return [poincare_series(kaehler_presentation(V, p).graded(V.weights), V.weights, prefix_length)
            for p in range(V.dim + 1)]


def hom_index_graded(V, omega, series=None):
    """sum_i (-1)^(n-i) P_i(t) t^((n-i) d) at t = 1, d the degree of omega.

    dx_j carries degree w_j - 1, so for the standard grading every dx_j has
    degree 0 and a constant form has degree 0.
    """
    if V.weights is None:
        raise PreconditionError(f"{V.name} carries no weights")
    d = omega.degree(V.weights)
    if d is None:
        raise PreconditionError("form is not homogeneous for the grading of the germ")
    series = series or graded_complex_series(V)
    n = V.dim
    twist = [(n - i) * d for i in range(n + 1)]
    value = alternating_euler(series, twist)
    return value if n % 2 == 0 else -value


def nu_curve(C, param, seed=0, attempts=5, return_details=False):
    """Ind_hom - Ind_rad for a seeded generic d(l), confirmed by a second draw."""
    _require_reduced_curve(C)
    rng = random.Random(seed)
    for _ in range(attempts):
        values = []
        forms = []
        for _ in range(2):
            form = generic_linear_form(C.ring, rng, param)
            try:
                values.append(hom_index_curve(C, form) - radial_index_curve(form, param))
            except (NonIsolatedError, UndeterminedOrderError):
                values.append(None)
            forms.append(form)
        if values[0] is not None and values[0] == values[1]:
            if return_details:
                return values[0], forms
            return values[0]
    raise GenericityError(f"nu did not agree across draws after {attempts} attempts")


def nu_direct_at(C, bound):
    """dim Omega^1 / (dO + m^(B+1) Omega^1) by truncated linear algebra."""
    trunc = TruncatedOmega1(C, bound)
    ech = trunc.relation_echelon
    N = C.nvars
    for e in monomials_up_to(N, bound + 1)[1:]:
        row = {}
        for j, a in enumerate(e):
            if a:
                f = e[:j] + (a - 1,) + e[j + 1:]
                row[trunc.index[(f, j)]] = a
        ech.add(row)
    return trunc.dim - ech.rank


def nu_direct_curve(C, bound=12, start=1):
    """dim Omega^1_{C,0} / dO_{C,0}, returned once two consecutive bounds agree."""
    _require_reduced_curve(C)
    prev = None
    for B in range(start, bound + 1):
        cur = nu_direct_at(C, B)
        if cur == prev:
            return cur
        prev = cur
    raise NotStabilizedError(f"dim Omega^1/dO did not stabilize by bound {bound}")


def minimized_index(index_fn, omega, ring, seed=0, draws=7, epsilon=1):
    """Heuristic minimum of ``index_fn`` over omega + epsilon d(l) for seeded l."""
    rng = random.Random(seed)
    best = None
    for _ in range(draws):
        form = omega + random_linear_form(ring, rng).scale(epsilon)
        try:
            v = index_fn(form)
        except (NonIsolatedError, UndeterminedOrderError):
            continue
        best = v if best is None else min(best, v)
    if best is None:
        raise GenericityError("no perturbed form had an isolated singularity")
    return best


# ---------------------------------------------------------------------------
# reports


@dataclass
class IndexReport:
    germ: str
    form: str = None
    seed: int = None
    egz: int = None
    hom: int = None
    radial: int = None
    nu: int = None
    tau: int = None
    milnor_oracle: int = None
    routes: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    def consistency(self):
        flags = {}
        if self.egz is not None and self.hom is not None:
            flags["egz_equals_hom"] = self.egz == self.hom
        if self.hom is not None and self.radial is not None and self.nu is not None:
            flags["nu_is_hom_minus_radial"] = self.nu == self.hom - self.radial
        return flags

    def to_dict(self):
        out = {"schema": 1, "germ": self.germ}
        if self.form is not None:
            out["form"] = self.form
        if self.seed is not None:
            out["seed"] = self.seed
        values = {}
        for key in ("egz", "hom", "radial", "nu", "tau", "milnor_oracle"):
            v = getattr(self, key)
            if v is not None:
                values[key] = v
        out["values"] = values
        out["routes"] = dict(sorted(self.routes.items()))
        out["consistency"] = self.consistency()
        out.update(self.extra)
        return out
