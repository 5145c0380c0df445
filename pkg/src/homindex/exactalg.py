"""Exact arithmetic: sparse multivariate polynomials over Q, truncated
univariate power series, and univariate rational functions.

Rationals are ``fractions.Fraction`` throughout; nothing here ever touches a
float.
"""

from fractions import Fraction

from .errors import ContextMismatchError, PoleError, PrecisionMismatchError

Rational = Fraction

__all__ = [
    "Rational", "PolyRing", "Polynomial", "poly_mul", "partial_derivative",
    "TruncatedSeries", "series_compose", "series_order",
    "RationalFunction", "ratfun_eval",
]


def _q(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class PolyRing:
    """Q[x_1, ..., x_N] with fixed variable names."""

    __slots__ = ("names", "nvars")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self.nvars = len(names)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(("PolyRing", self.names))

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = _q(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps, c=1):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ContextMismatchError(f"exponent vector {exps} has wrong length for {self}")
        c = _q(c)
        return Polynomial(self, {exps: c} if c else {})

    def gen(self, j):
        e = [0] * self.nvars
        e[j] = 1
        return self.monomial(e)

    def gens(self):
        return [self.gen(j) for j in range(self.nvars)]

    def index(self, name):
        return self.names.index(name)


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to nonzero rationals."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ContextMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _q(other)
            return Polynomial(self.ring, {e: c / other for e, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- inspection -------------------------------------------------------
    def __len__(self):
        return len(self.terms)

    def degree(self, weights=None):
        """Largest (weighted) degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if weights is None:
            return max(sum(e) for e in self.terms)
        return max(sum(w * a for w, a in zip(weights, e)) for e in self.terms)

    def low_degree(self, weights=None):
        if not self.terms:
            return -1
        if weights is None:
            return min(sum(e) for e in self.terms)
        return min(sum(w * a for w, a in zip(weights, e)) for e in self.terms)

    def is_homogeneous(self, weights=None):
        return self.degree(weights) == self.low_degree(weights)

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def diff(self, j):
        out = {}
        for e, c in self.terms.items():
            if e[j]:
                f = list(e)
                f[j] -= 1
                out[tuple(f)] = c * e[j]
        return Polynomial(self.ring, out)

    def truncate(self, max_degree):
        return Polynomial(self.ring, {e: c for e, c in self.terms.items() if sum(e) <= max_degree})

    def evaluate(self, point):
        point = [_q(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, a in zip(point, e):
                if a:
                    v *= x ** a
            total += v
        return total

    def sorted_terms(self):
        """Terms in degree-reverse-lexicographic descending order (display order)."""
        return sorted(self.terms.items(),
                      key=lambda t: (sum(t[0]), tuple(-a for a in reversed(t[0]))),
                      reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mon = "*".join(
                name if a == 1 else f"{name}^{a}"
                for name, a in zip(self.ring.names, e) if a
            )
            mag = abs(c)
            if not mon:
                body = str(mag)
            elif mag == 1:
                body = mon
            else:
                body = f"{mag}*{mon}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def poly_mul(a, b):
    """Exact product of two polynomials in the same ring."""
    if a.ring != b.ring:
        raise ContextMismatchError(f"{a.ring} vs {b.ring}")
    return a * b


def partial_derivative(p, j):
    """Formal partial derivative with respect to variable index ``j``."""
    if not 0 <= j < p.ring.nvars:
        raise IndexError(f"variable index {j} out of range for {p.ring}")
    return p.diff(j)


# ---------------------------------------------------------------------------
# truncated power series in one variable


class TruncatedSeries:
    """Coefficients c_0..c_D of a power series known modulo t^(D+1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, precision=None):
        coeffs = [_q(c) for c in coeffs]
        if precision is not None:
            if precision < 0:
                raise ValueError("precision must be nonnegative")
            coeffs = (coeffs + [Fraction(0)] * (precision + 1))[: precision + 1]
        if not coeffs:
            raise ValueError("a truncated series needs precision >= 0")
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_poly(cls, poly_coeffs, precision):
        return cls(poly_coeffs, precision)

    @property
    def precision(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        shown = " + ".join(f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c) or "0"
        return f"TruncatedSeries({shown} + O(t^{self.precision + 1}))"

    def _other(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.precision)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        d = min(self.precision, other.precision)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: d + 1], other.coeffs[: d + 1])])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        d = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (d + 1)
        for i in range(d + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(d + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = TruncatedSeries([1], self.precision)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self):
        """d/dt; the top coefficient is lost, so precision drops by one."""
        if self.precision == 0:
            raise PrecisionMismatchError("cannot differentiate a series of precision 0")
        return TruncatedSeries([i * c for i, c in enumerate(self.coeffs) if i])

    def order(self):
        return series_order(self)

    def is_zero(self):
        return not any(self.coeffs)


def series_order(s):
    """Index of the first nonzero coefficient, or ``None`` if the series
    vanishes to its precision (order undetermined)."""
    for i, c in enumerate(s.coeffs):
        if c:
            return i
    return None


def series_compose(p, branch):
    """Substitute truncated series for the variables of ``p``."""
    branch = list(branch)
    if len(branch) != p.ring.nvars:
        raise ContextMismatchError(
            f"branch has {len(branch)} series but {p.ring} has {p.ring.nvars} variables")
    precisions = {s.precision for s in branch}
    if len(precisions) > 1:
        raise PrecisionMismatchError(f"branch series have precisions {sorted(precisions)}")
    (d,) = precisions
    powers = [{0: TruncatedSeries([1], d)} for _ in branch]

    def power(j, a):
        cache = powers[j]
        if a not in cache:
            k = max(k for k in cache if k < a)
            s = cache[k]
            for _ in range(a - k):
                s = s * branch[j]
            cache[a] = s
        return cache[a]

    total = [Fraction(0)] * (d + 1)
    for e, c in p.terms.items():
        term = None
        for j, a in enumerate(e):
            if a:
                term = power(j, a) if term is None else term * power(j, a)
        if term is None:
            total[0] += c
        else:
            for i, v in enumerate(term.coeffs):
                if v:
                    total[i] += c * v
    return TruncatedSeries(total)


# ---------------------------------------------------------------------------
# dense univariate polynomials (coefficient tuples, lowest degree first)


def upoly_trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return tuple(a)


def upoly_add(a, b):
    n = max(len(a), len(b))
    return upoly_trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def upoly_neg(a):
    return tuple(-c for c in a)


def upoly_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return upoly_trim(out)


def upoly_shift(a, k):
    """Multiply by t^k (k >= 0)."""
    return tuple([Fraction(0)] * k + list(a)) if a else ()


def upoly_divmod(a, b):
    b = upoly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [_q(c) for c in upoly_trim(a)]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            a[i + k] -= c * bc
        a = list(upoly_trim(a))
    return upoly_trim(q), tuple(a)


def upoly_gcd(a, b):
    a, b = upoly_trim(a), upoly_trim(b)
    while b:
        a, b = b, upoly_divmod(a, b)[1]
    if not a:
        return ()
    return tuple(c / a[-1] for c in a)


def upoly_eval(a, x):
    v = Fraction(0)
    for c in reversed(a):
        v = v * x + c
    return v


class RationalFunction:
    """numerator/denominator in Q[t], stored in lowest terms.

    The denominator is normalised to constant term 1 when that term is
    nonzero (the Hilbert-series case), otherwise to a monic leading term.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = upoly_trim(_q(c) for c in num)
        den = upoly_trim(_q(c) for c in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = upoly_gcd(num, den) if num else den
        if len(g) > 1:
            num = upoly_divmod(num, g)[0]
            den = upoly_divmod(den, g)[0]
        if not num:
            den = (Fraction(1),)
        scale = den[0] if den[0] else den[-1]
        self.num = tuple(c / scale for c in num)
        self.den = tuple(c / scale for c in den)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other)
        return isinstance(other, RationalFunction) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other)
        return RationalFunction(
            upoly_add(upoly_mul(self.num, other.den), upoly_mul(other.num, self.den)),
            upoly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(upoly_neg(self.num), self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other)
        return RationalFunction(upoly_mul(self.num, other.num), upoly_mul(self.den, other.den))

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by t^k; negative k divides."""
        if k >= 0:
            return RationalFunction(upoly_shift(self.num, k), self.den)
        return RationalFunction(self.num, upoly_shift(self.den, -k))

    def is_polynomial(self):
        return len(self.den) == 1

    def series(self, n):
        """First ``n`` Taylor coefficients at t = 0."""
        if not self.den[0]:
            raise PoleError("denominator vanishes at t = 0")
        out = []
        inv = 1 / self.den[0]
        for k in range(n):
            c = self.num[k] if k < len(self.num) else Fraction(0)
            for j in range(1, min(k, len(self.den) - 1) + 1):
                c -= self.den[j] * out[k - j]
            out.append(c * inv)
        return out

    def __call__(self, t0):
        return ratfun_eval(self, t0)

    def __repr__(self):
        def show(p):
            return " + ".join(f"{c}*t^{i}" for i, c in enumerate(p) if c) or "0"
        return f"RationalFunction(({show(self.num)}) / ({show(self.den)}))"


def ratfun_eval(f, t0):
    """Exact value of ``f`` at ``t0``; raises PoleError at a pole."""
    t0 = _q(t0)
    d = upoly_eval(f.den, t0)
    if not d:
        raise PoleError(f"pole at t = {t0}")
    return upoly_eval(f.num, t0) / d


def monomials_up_to(nvars, max_degree):
    """All exponent tuples of total degree <= max_degree, graded ascending."""
    out = []
    for d in range(max_degree + 1):
        out.extend(monomials_of_degree(nvars, d))
    return out


def monomials_of_degree(nvars, d):
    if nvars == 0:
        return [()] if d == 0 else []
    if nvars == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - a):
            out.append((a,) + rest)
    return out


def det(matrix):
    """Determinant of a square matrix of ring elements by Laplace expansion
    along the first row (matrices here are at most a few rows)."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total
