"""Monomial orders (global and local) and position-over-term / term-over-position
module orders built on them.

Every order is realised as a *sort key*: ``order.key(exps)`` returns a tuple
and a monomial is larger than another exactly when its key is larger.  Keys
are cached, since normal-form reduction asks for them constantly.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ContextMismatchError

KINDS = ("lex", "degrevlex", "local", "wdegrevlex", "wlocal")

LT, EQ, GT = -1, 0, 1


def _revlex_tail(exps):
    return tuple(-a for a in reversed(exps))


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "degrevlex"
    weights: tuple = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}; expected one of {KINDS}")
        if self.kind.startswith("w"):
            if not self.weights:
                raise ValueError(f"order {self.kind} needs a weight vector")
            if any(int(w) != w or w <= 0 for w in self.weights):
                raise ValueError(f"weights must be positive integers, got {self.weights}")
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        elif self.weights is not None:
            raise ValueError(f"order {self.kind} takes no weights")

    @classmethod
    def parse(cls, text):
        """Build an order from the ``--order`` flag syntax, e.g. ``wlocal:2,3``."""
        kind, _, rest = text.partition(":")
        if kind == "neg-degrevlex":
            kind = "local"
        weights = tuple(int(w) for w in rest.split(",")) if rest else None
        return cls(kind, weights)

    def __str__(self):
        if self.weights:
            return f"{self.kind}:{','.join(map(str, self.weights))}"
        return self.kind

    def is_local(self):
        return self.kind in ("local", "wlocal")

    def degree(self, exps):
        """The degree the order is graded by (weighted for the w-kinds)."""
        if self.weights is None:
            return sum(exps)
        if len(exps) != len(self.weights):
            raise ContextMismatchError(f"{len(exps)} exponents for {len(self.weights)} weights")
        return sum(w * a for w, a in zip(self.weights, exps))

    def key(self, exps):
        return _key(self, exps)

    def compare(self, m1, m2):
        return compare(m1, m2, self)


@lru_cache(maxsize=None)
def _key(order, exps):
    kind = order.kind
    if kind == "lex":
        return exps
    if kind == "degrevlex":
        return (sum(exps), _revlex_tail(exps))
    if kind == "local":
        return (-sum(exps), _revlex_tail(exps))
    wdeg = order.degree(exps)
    if kind == "wdegrevlex":
        return (wdeg, _revlex_tail(exps))
    return (-wdeg, _revlex_tail(exps))


def compare(m1, m2, order):
    """Three-way comparison of exponent tuples: -1, 0 or 1."""
    m1, m2 = tuple(m1), tuple(m2)
    if len(m1) != len(m2):
        raise ContextMismatchError(f"exponent lengths differ: {len(m1)} vs {len(m2)}")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


def is_local(order):
    return order.is_local()


@dataclass(frozen=True)
class ModuleOrder:
    """Order on pairs (monomial, component).

    ``position="pot"`` compares components first (component 0 largest), which
    is the default.  ``"top"`` compares the shifted degree first and breaks
    ties by component; the graded Hilbert-series computation uses it because
    it keeps module Buchberger runs degree-by-degree.
    """

    base: MonomialOrder = field(default_factory=MonomialOrder)
    position: str = "pot"
    shifts: tuple = ()

    def __post_init__(self):
        if self.position not in ("pot", "top"):
            raise ValueError(f"position rule must be 'pot' or 'top', got {self.position!r}")
        object.__setattr__(self, "shifts", tuple(self.shifts))

    def shift(self, comp):
        return self.shifts[comp] if comp < len(self.shifts) else 0

    def degree(self, mon):
        comp, exps = mon
        return self.base.degree(exps) + self.shift(comp)

    def key(self, mon):
        return _module_key(self, mon)

    def is_local(self):
        return self.base.is_local()


@lru_cache(maxsize=None)
def _module_key(order, mon):
    comp, exps = mon
    base = order.base.key(exps)
    if order.position == "pot":
        return (-comp, base)
    if order.base.kind == "lex":
        return (base, -comp)
    deg, tail = base
    s = order.shift(comp)
    deg = deg - s if order.base.is_local() else deg + s
    return (deg, tail, -comp)
