"""Presentations of Kaehler differential modules, wedge-by-a-form matrices and
the minors ideal of a complete intersection.

Sign convention: generators dx_J use strictly increasing index tuples and
``dx_j ^ dx_K = (-1)^#{k in K : k < j} dx_{K + j}`` (insertion from the left).
Wedging with a form therefore means ``eta -> omega ^ eta``.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import NonHomogeneousError, PreconditionError
from .exactalg import det
from .dimension import GradedPresentation


@dataclass
class VarietyGerm:
    """A germ (V, 0) cut out by polynomial equations in Q[x_1..x_N]."""

    ring: object
    equations: list
    dim: int
    icis: bool = False
    reduced: bool = True
    weights: tuple = None
    name: str = "germ"

    def __post_init__(self):
        self.equations = [f for f in self.equations if f]
        if any(f.ring != self.ring for f in self.equations):
            raise PreconditionError("equations live in a different ring")
        if not 0 <= self.dim <= self.ring.nvars:
            raise PreconditionError(f"dimension {self.dim} out of range")
        if self.icis and len(self.equations) != self.ring.nvars - self.dim:
            raise PreconditionError(
                f"an ICIS of dimension {self.dim} in C^{self.ring.nvars} needs "
                f"{self.ring.nvars - self.dim} equations, got {len(self.equations)}")
        if self.weights is not None:
            self.weights = tuple(int(w) for w in self.weights)
            if len(self.weights) != self.ring.nvars or any(w <= 0 for w in self.weights):
                raise PreconditionError(f"bad weight vector {self.weights}")
            for f in self.equations:
                if not f.is_homogeneous(self.weights):
                    raise NonHomogeneousError(f"{f} is not homogeneous for weights {self.weights}")

    @property
    def nvars(self):
        return self.ring.nvars

    @property
    def codim(self):
        return len(self.equations)

    def equation_degrees(self):
        return [f.degree(self.weights) for f in self.equations]


@dataclass
class OneForm:
    """omega = sum_j A_j dx_j."""

    coefficients: tuple

    def __post_init__(self):
        self.coefficients = tuple(self.coefficients)
        if not self.coefficients:
            raise PreconditionError("a 1-form needs coefficients")
        ring = self.coefficients[0].ring
        if any(a.ring != ring for a in self.coefficients):
            raise PreconditionError("form coefficients live in different rings")
        if not any(self.coefficients):
            raise PreconditionError("the zero form has no isolated singularity")

    @property
    def ring(self):
        return self.coefficients[0].ring

    @classmethod
    def differential(cls, f):
        """df."""
        return cls(tuple(f.diff(j) for j in range(f.ring.nvars)))

    def __add__(self, other):
        return OneForm(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, c):
        return OneForm(tuple(a * c for a in self.coefficients))

    def degree(self, weights):
        """Common degree of omega when dx_j has degree w_j - 1, or None if
        omega is not homogeneous in that grading."""
        degs = set()
        for a, w in zip(self.coefficients, weights):
            if a:
                if not a.is_homogeneous(weights):
                    return None
                degs.add(a.degree(weights) + w - 1)
        return degs.pop() if len(degs) == 1 else None

    def __str__(self):
        names = self.ring.names
        return " + ".join(f"({a})*d{n}" for a, n in zip(self.coefficients, names) if a)


def subsets(n, p):
    return list(combinations(range(n), p))


def insert_sign(j, K):
    """Position of j in sorted(K + (j,)) and the sign of dx_j ^ dx_K, or
    (None, 0) if j is already in K."""
    if j in K:
        return None, 0
    pos = sum(1 for k in K if k < j)
    J = tuple(sorted(K + (j,)))
    return J, (-1) ** pos


@dataclass
class DifferentialPresentation:
    p: int
    basis: list
    relations: list = field(default_factory=list)
    ring: object = None
    degrees: tuple = None

    @property
    def rank(self):
        return len(self.basis)

    def graded(self, weights):
        return GradedPresentation(self.ring, self.degrees, self.relations, weights)


def generator_degrees(basis, weights):
    """Degree of dx_J: sum over j in J of (w_j - 1); all zero for the
    standard grading, where every dx_j has degree 0."""
    if weights is None:
        return tuple(0 for _ in basis)
    return tuple(sum(weights[j] - 1 for j in J) for J in basis)


def wedge_one(coeffs, K, index, ring):
    """The vector of (sum_j c_j dx_j) ^ dx_K in the basis ``index``."""
    vec = [ring.zero() for _ in index]
    for j, c in enumerate(coeffs):
        if not c:
            continue
        J, sign = insert_sign(j, K)
        if J is None:
            continue
        pos = index[J]
        vec[pos] = vec[pos] + (c if sign > 0 else -c)
    return tuple(vec)


def kaehler_presentation(V, p):
    """Presentation of Omega^p_{V,0} over the ambient polynomial ring.

    Relations: f_s dx_J for every equation and every p-subset J, and
    df_s ^ dx_K for every (p-1)-subset K.
    """
    N = V.nvars
    if not 0 <= p <= N:
        raise PreconditionError(f"exterior degree {p} out of range 0..{N}")
    ring = V.ring
    basis = subsets(N, p)
    index = {J: i for i, J in enumerate(basis)}
    relations = []
    for f in V.equations:
        for i in range(len(basis)):
            vec = [ring.zero()] * len(basis)
            vec[i] = f
            relations.append(tuple(vec))
    if p >= 1:
        for f in V.equations:
            grad = [f.diff(j) for j in range(N)]
            for K in subsets(N, p - 1):
                vec = wedge_one(grad, K, index, ring)
                if any(vec):
                    relations.append(vec)
    return DifferentialPresentation(p, basis, relations, ring, generator_degrees(basis, V.weights))


def expected_relation_count(V, p):
    k = len(V.equations)
    return k * comb(V.nvars, p) + (k * comb(V.nvars, p - 1) if p >= 1 else 0)


def wedge_matrix(omega, p):
    """Matrix of eta -> omega ^ eta from Omega^p to Omega^(p+1) generators.

    Rows are indexed by (p+1)-subsets, columns by p-subsets, both in
    lexicographic order.
    """
    ring = omega.ring
    N = ring.nvars
    if not 0 <= p < N:
        raise PreconditionError(f"wedge from degree {p} needs 0 <= p < {N}")
    rows = subsets(N, p + 1)
    cols = subsets(N, p)
    index = {J: i for i, J in enumerate(rows)}
    M = [[ring.zero() for _ in cols] for _ in rows]
    for c, K in enumerate(cols):
        vec = wedge_one(omega.coefficients, K, index, ring)
        for r, entry in enumerate(vec):
            M[r][c] = entry
    return M


def matmul(A, B):
    ring = A[0][0].ring
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), ring.zero())
             for j in range(len(B[0]))] for i in range(len(A))]


def apply_matrix(M, vec):
    ring = vec[0].ring
    return tuple(sum((M[i][k] * vec[k] for k in range(len(vec))), ring.zero()) for i in range(len(M)))


def jacobian_form_matrix(V, omega):
    rows = [[f.diff(j) for j in range(V.nvars)] for f in V.equations]
    rows.append(list(omega.coefficients))
    return rows


def minors_ideal(V, omega):
    """f_1..f_k together with all (k+1)-minors of the Jacobian of f with the
    row (A_1..A_N) appended."""
    if not V.icis:
        raise PreconditionError(f"{V.name} is not declared a complete intersection")
    k = len(V.equations)
    M = jacobian_form_matrix(V, omega)
    gens = list(V.equations)
    for cols in combinations(range(V.nvars), k + 1):
        minor = det([[row[c] for c in cols] for row in M])
        if minor:
            gens.append(minor)
    return gens
