"""Normal forms and standard bases of submodules of free modules Q[x]^r.

Global orders run plain Buchberger with full reduction.  Local orders use
Mora's normal form: reducers are chosen by minimal ecart, and a reductand
whose ecart is below that of its reducer joins the reducer set.  The same
pair loop (normal selection strategy, Gebauer-Moeller criteria) drives both.

Internally a module element is a dict ``{(component, exponents): Fraction}``.
Public entry points accept and return tuples of :class:`Polynomial`.
"""

from contextlib import contextmanager
from fractions import Fraction

from .errors import ContextMismatchError, NotAStandardBasisError, ResourceLimitError
from .exactalg import Polynomial
from .orders import ModuleOrder, MonomialOrder

DEFAULT_MAX_PAIRS = 200_000

_recorders = []


@contextmanager
def record_bases():
    """Collect every standard basis computed inside the ``with`` block."""
    found = []
    _recorders.append(found)
    try:
        yield found
    finally:
        _recorders.remove(found)


# ---------------------------------------------------------------------------
# vector helpers


def to_vec(element):
    vec = {}
    for comp, p in enumerate(element):
        for e, c in p.terms.items():
            vec[(comp, e)] = c
    return vec


def from_vec(vec, ring, rank):
    parts = [dict() for _ in range(rank)]
    for (comp, e), c in vec.items():
        parts[comp][e] = c
    return tuple(Polynomial(ring, part) for part in parts)


def lead(vec, order):
    return max(vec, key=order.key)


def ecart(vec, lm, order):
    return max(order.degree(m) for m in vec) - order.degree(lm)


def divides(m1, m2):
    return m1[0] == m2[0] and all(a <= b for a, b in zip(m1[1], m2[1]))


def mon_quotient(m2, m1):
    return tuple(b - a for a, b in zip(m1[1], m2[1]))


def lcm(m1, m2):
    return (m1[0], tuple(max(a, b) for a, b in zip(m1[1], m2[1])))


def _axpy(h, c, shift, g):
    """h -= c * x^shift * g, in place."""
    for (comp, e), v in g.items():
        m = (comp, tuple(a + b for a, b in zip(e, shift)))
        w = h.get(m, 0) - c * v
        if w:
            h[m] = w
        else:
            h.pop(m, None)


def monic(vec, order):
    c = vec[lead(vec, order)]
    if c == 1:
        return dict(vec)
    return {m: v / c for m, v in vec.items()}


class _Reducer:
    __slots__ = ("vec", "lm", "ecart")

    def __init__(self, vec, order):
        self.vec = vec
        self.lm = lead(vec, order)
        self.ecart = ecart(vec, self.lm, order)


def corner_degree(leads, order, rank=1):
    """Least K such that every monomial of degree >= K (in the grading of the
    order) lies in the monomial module spanned by ``leads``; None when there
    is no such K or the order does not support the argument below.

    For a local degree order (an ideal, or a module under term-over-position
    without shifts) the leading module is that of the tangent cone.  If it
    contains every monomial of degree K, the associated graded of F/M vanishes
    in degree K, so m^K F lies in M by Nakayama: terms of degree >= K may be
    dropped without leaving M.
    """
    if not _corner_applies(order, rank):
        return None
    powers = {}
    nvars = None
    for comp, e in leads:
        nvars = len(e)
        support = [i for i, a in enumerate(e) if a]
        key = (comp, support[0]) if len(support) == 1 else None
        if not support:
            powers[(comp, None)] = 0
        elif key is not None:
            powers[key] = min(powers.get(key, e[key[1]]), e[key[1]])
    if nvars is None:
        return None
    K = 0
    for comp in range(rank):
        if (comp, None) in powers:
            continue
        if any((comp, i) not in powers for i in range(nvars)):
            return None
        K = max(K, order.base.degree(tuple(powers[(comp, i)] - 1 for i in range(nvars))) + 1)
    return K


def _corner_applies(order, rank):
    if not order.is_local():
        return False
    return rank == 1 or (order.position == "top" and not any(order.shifts))


def _truncate(h, corner, order):
    for m in [m for m in h if order.base.degree(m[1]) >= corner]:
        del h[m]


def _mora_top(h, reducers, order, corner=None):
    """Top-reduce ``h`` (a fresh dict, consumed) against ``reducers``.

    For global degree-compatible orders every ecart is measured against a
    maximal-degree lead, so the ecart rule never fires and this is ordinary
    top reduction.  For local orders it is Mora's weak normal form; with a
    ``corner`` (see :func:`corner_degree`) terms of that degree and above are
    discarded, which keeps the reduction finite.
    """
    local = order.is_local()
    extra = []
    if corner is not None:
        _truncate(h, corner, order)
    while h:
        lm = lead(h, order)
        best = None
        for r in reducers:
            if divides(r.lm, lm) and (best is None or r.ecart < best.ecart):
                best = r
                if not local or r.ecart == 0:
                    break
        if local:
            for r in extra:
                if divides(r.lm, lm) and (best is None or r.ecart < best.ecart):
                    best = r
        if best is None:
            return h
        if local:
            e_h = ecart(h, lm, order)
            if best.ecart > e_h:
                extra.append(_Reducer(dict(h), order))
        _axpy(h, h[lm] / best.vec[best.lm], mon_quotient(lm, best.lm), best.vec)
        if corner is not None:
            _truncate(h, corner, order)
    return h


def _corner_of(G):
    return corner_degree([r.lm for r in G._reducers], G.order, G.rank)


def _full_reduce(h, reducers, order):
    """Global orders only: reduce every term, not just the leading one."""
    out = {}
    while h:
        h = _mora_top(h, reducers, order)
        if not h:
            break
        lm = lead(h, order)
        out[lm] = h.pop(lm)
    return out


# ---------------------------------------------------------------------------
# public types


class Submodule:
    """A submodule of the free module of rank ``rank`` given by generators.

    Generators may be tuples of polynomials (module elements) or, for
    ``rank == 1``, bare polynomials (ideal generators).  Zero generators are
    dropped.
    """

    completed = False

    def __init__(self, rank, generators, order=None, ring=None):
        if order is None:
            order = ModuleOrder(MonomialOrder("degrevlex"))
        elif isinstance(order, MonomialOrder):
            order = ModuleOrder(order)
        self.rank = rank
        self.order = order
        gens = []
        for g in generators:
            if isinstance(g, Polynomial):
                g = (g,)
            g = tuple(g)
            if len(g) != rank:
                raise ContextMismatchError(f"element of length {len(g)} in a free module of rank {rank}")
            if ring is None:
                ring = g[0].ring
            if any(p.ring != ring for p in g):
                raise ContextMismatchError("generators live in different rings")
            if any(p for p in g):
                gens.append(g)
        if ring is None:
            raise ValueError("ring must be given when there are no generators")
        self.ring = ring
        self.generators = tuple(gens)

    def vectors(self):
        return [to_vec(g) for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        kind = "StandardBasis" if self.completed else "Submodule"
        return f"{kind}(rank={self.rank}, {len(self.generators)} generators, order={self.order})"


class StandardBasis(Submodule):
    """A completed standard basis; immutable once built."""

    completed = True

    def __init__(self, rank, vecs, order, ring, stats=None):
        self._vecs = [dict(v) for v in vecs]
        super().__init__(rank, [from_vec(v, ring, rank) for v in self._vecs], order, ring)
        self.stats = stats or {}
        self._reducers = [_Reducer(v, order) for v in self._vecs]

    def vectors(self):
        return [dict(v) for v in self._vecs]

    def leads(self):
        return [r.lm for r in self._reducers]


def _as_submodule(G, order=None):
    if isinstance(G, Submodule):
        return G
    G = list(G)
    first = G[0]
    rank = 1 if isinstance(first, Polynomial) else len(first)
    return Submodule(rank, G, order)


def normal_form(element, G, full=None):
    """Normal form of ``element`` with respect to the generators of ``G``.

    Local orders give Mora's weak normal form: ``u * element - result`` lies
    in the span of ``G`` for a unit ``u``.  Global orders give the fully
    reduced remainder (set ``full=False`` for top reduction only).
    """
    G = _as_submodule(G)
    if isinstance(element, Polynomial):
        element = (element,)
    order = G.order
    reducers = G._reducers if isinstance(G, StandardBasis) else [_Reducer(v, order) for v in G.vectors()]
    h = to_vec(element)
    if full is None:
        full = not order.is_local()
    if full:
        h = _full_reduce(h, reducers, order)
    else:
        corner = _corner_of(G) if isinstance(G, StandardBasis) else None
        h = _mora_top(h, reducers, order, corner)
    return from_vec(h, G.ring, G.rank)


def spoly_vec(f, g, order, lf=None, lg=None):
    lf = lead(f, order) if lf is None else lf
    lg = lead(g, order) if lg is None else lg
    if lf[0] != lg[0]:
        return {}
    L = lcm(lf, lg)
    h = {}
    _axpy(h, -1 / f[lf], mon_quotient(L, lf), f)
    _axpy(h, 1 / g[lg], mon_quotient(L, lg), g)
    return h


def _pair_key(order, L, i, j):
    return (order.degree(L), order.key(L), j, i)


def _update(basis, pairs, new_index, order, ideal):
    """Gebauer-Moeller installation of basis[new_index] into the pair set.

    The coprime-leads criterion only holds for ideals, so ``ideal`` gates it.
    """
    h = basis[new_index]
    lh = h.lm
    # chain criterion on old pairs
    kept = {}
    for (i, j), L in pairs.items():
        li, lj = basis[i].lm, basis[j].lm
        if divides(lh, L) and lcm(li, lh) != L and lcm(lj, lh) != L:
            continue
        kept[(i, j)] = L
    # new pairs, grouped by lcm
    groups = {}
    for i in range(new_index):
        li = basis[i].lm
        if li[0] != lh[0]:
            continue
        groups.setdefault(lcm(li, lh), []).append(i)
    minimal = []
    for L in sorted(groups, key=lambda m: (sum(m[1]), m[1])):
        if not any(divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        idx = groups[L]
        coprime = ideal and any(
            all(a == 0 or b == 0 for a, b in zip(basis[i].lm[1], lh[1])) for i in idx)
        if not coprime:
            kept[(min(idx), new_index)] = L
    return kept


def standard_basis(G, max_pairs=DEFAULT_MAX_PAIRS):
    """Standard basis of ``G`` under its module order.

    The result is minimal (no leading term divides another), monic and sorted
    by increasing leading term; under global orders it is fully interreduced.
    Raises :class:`ResourceLimitError` after ``max_pairs`` S-vector reductions.
    """
    G = _as_submodule(G)
    order = G.order
    local = order.is_local()
    vecs = sorted((monic(v, order) for v in G.vectors()), key=lambda v: order.key(lead(v, order)))
    basis = []
    pairs = {}
    track_corner = _corner_applies(order, G.rank)
    corner = None
    for v in vecs:
        basis.append(_Reducer(v, order))
        pairs = _update(basis, pairs, len(basis) - 1, order, G.rank == 1)
    if track_corner:
        corner = corner_degree([r.lm for r in basis], order, G.rank)
    processed = 0
    zero_reductions = 0
    while pairs:
        (i, j), L = min(pairs.items(), key=lambda kv: _pair_key(order, kv[1], *kv[0]))
        del pairs[(i, j)]
        processed += 1
        if processed > max_pairs:
            raise ResourceLimitError(
                f"standard basis exceeded {max_pairs} pair reductions; input is beyond desk scale")
        s = spoly_vec(basis[i].vec, basis[j].vec, order, basis[i].lm, basis[j].lm)
        h = _mora_top(s, basis, order, corner) if s else s
        if not h:
            zero_reductions += 1
            continue
        basis.append(_Reducer(monic(h, order), order))
        pairs = _update(basis, pairs, len(basis) - 1, order, G.rank == 1)
        if track_corner:
            corner = corner_degree([r.lm for r in basis], order, G.rank)

    # minimalise: drop elements whose lead is divisible by another lead
    basis.sort(key=lambda r: (order.key(r.lm), len(r.vec)))
    minimal = []
    for k, r in enumerate(basis):
        if not any(divides(o.lm, r.lm) and (o.lm != r.lm or n < k)
                   for n, o in enumerate(basis) if n != k):
            minimal.append(r)
    if not local:
        reduced = []
        for k, r in enumerate(minimal):
            others = minimal[:k] + minimal[k + 1:]
            tail = dict(r.vec)
            lc = tail.pop(r.lm)
            tail = _full_reduce(tail, others, order)
            tail[r.lm] = lc
            reduced.append(_Reducer(monic(tail, order), order))
        minimal = reduced
    stats = {"pairs": processed, "zero_reductions": zero_reductions, "size": len(minimal)}
    result = StandardBasis(G.rank, [r.vec for r in minimal], order, G.ring, stats)
    for found in _recorders:
        found.append(result)
    return result


def leading_module(G):
    """Minimal leading terms ``(exponents, component)`` of a standard basis."""
    if not getattr(G, "completed", False):
        raise NotAStandardBasisError("leading_module needs a completed standard basis")
    leads = sorted(set(G.leads()))
    out = []
    for m in leads:
        if not any(o != m and divides(o, m) for o in leads):
            out.append((m[1], m[0]))
    return out


def s_vectors_reduce_to_zero(G):
    """Buchberger criterion check over all pairs (no criteria skipped)."""
    reducers = G._reducers
    order = G.order
    corner = _corner_of(G)
    for a in range(len(reducers)):
        for b in range(a + 1, len(reducers)):
            s = spoly_vec(reducers[a].vec, reducers[b].vec, order, reducers[a].lm, reducers[b].lm)
            if s and _mora_top(s, reducers, order, corner):
                return False
    return True
