"""Independent reference computations built on sympy only.

None of these touch the homindex kernel: they work with sympy expressions
and dense (sparse-stored) linear algebra over QQ.
"""

from itertools import combinations

import sympy
from sympy import QQ, Matrix, Poly, Rational, expand
from sympy.polys.matrices import DomainMatrix


def to_sympy(p, syms):
    """homindex Polynomial -> sympy expression (only used to feed oracles)."""
    out = sympy.Integer(0)
    for e, c in p.terms.items():
        term = Rational(c.numerator, c.denominator)
        for s, a in zip(syms, e):
            term *= s ** a
        out += term
    return out


def monomials(n, max_deg):
    out = [()]
    for _ in range(n):
        out = [m + (a,) for m in out for a in range(max_deg + 1)]
    return sorted((m for m in out if sum(m) <= max_deg), key=lambda m: (sum(m), m))


def _rank(rows, ncols):
    if not rows:
        return 0
    data = {i: r for i, r in enumerate(rows) if r}
    if not data:
        return 0
    data = {i: r for i, r in enumerate(data.values())}
    return DomainMatrix(data, (len(data), ncols), QQ).rank()


def _terms(expr, syms):
    if expr == 0:
        return {}
    return {e: QQ(int(c.p), int(c.q)) for e, c in Poly(expr, *syms).terms()}


def truncated_module_colength(elements, rank, syms, bound):
    """dim F / (M + m^(B+1) F) for the submodule M generated by ``elements``
    (tuples of sympy expressions) inside F = O^rank."""
    n = len(syms)
    mons = monomials(n, bound)
    index = {(e, c): k for k, (e, c) in enumerate((e, c) for e in mons for c in range(rank))}
    terms = [[_terms(expand(x), syms) for x in el] for el in elements]
    rows = []
    for el in terms:
        low = min((sum(e) for comp in el for e in comp), default=None)
        if low is None or low > bound:
            continue
        for beta in mons:
            if sum(beta) + low > bound:
                break
            row = {}
            for c, comp in enumerate(el):
                for e, v in comp.items():
                    f = tuple(a + b for a, b in zip(e, beta))
                    if sum(f) <= bound:
                        row[index[(f, c)]] = v
            if row:
                rows.append(row)
    return len(index) - _rank(rows, len(index))


def local_module_colength(elements, rank, syms, max_bound=12):
    """Colength of a submodule of O^rank at the origin.

    The truncated colength is computed for B = 0, 1, ... and returned once two
    consecutive bounds agree: equality at B and B+1 gives m^(B+1) F inside
    M + m^(B+2) F, hence inside M by Nakayama, so the value is exact.
    Returns None if no agreement happens by ``max_bound``.
    """
    prev = None
    for B in range(max_bound + 1):
        cur = truncated_module_colength(elements, rank, syms, B)
        if cur == prev:
            return cur
        prev = cur
    return None


def local_colength(gens, syms, max_bound=12):
    return local_module_colength([(g,) for g in gens], 1, syms, max_bound)


def minors(rows, k):
    """All k x k minors of a sympy Matrix, by determinant."""
    M = Matrix(rows)
    out = []
    for r in combinations(range(M.rows), k):
        for c in combinations(range(M.cols), k):
            out.append(expand(M.extract(list(r), list(c)).det()))
    return out


def minors_generators(equations, coeffs, syms):
    """f_1..f_k and the (k+1)-minors of [Jacobian; omega]."""
    jac = [[sympy.diff(f, s) for s in syms] for f in equations]
    rows = jac + [list(coeffs)]
    return list(equations) + minors(rows, len(equations) + 1)


def radial_index(coeffs, branches, syms, t):
    """sum of the exact pullback orders over branches, plus r - 1."""
    total = 0
    for phi in branches:
        expr = sum(a.subs(dict(zip(syms, phi)), simultaneous=True) * sympy.diff(p, t)
                   for a, p in zip(coeffs, phi))
        expr = expand(expr)
        if expr == 0:
            return None
        total += min(m[0] for m in Poly(expr, t).monoms())
    return total + len(branches) - 1


def graded_dimensions(relations, gen_degrees, weights, syms, dmax):
    """dim (F/M)_d for d = 0..dmax; relations homogeneous module elements."""
    n = len(syms)
    rank = len(gen_degrees)
    wdeg = lambda e: sum(a * w for a, w in zip(e, weights))
    mons = [m for m in monomials(n, dmax) if wdeg(m) <= dmax]
    rel_terms = []
    for el in relations:
        t = [_terms(expand(x), syms) for x in el]
        degs = {wdeg(e) + gen_degrees[c] for c, comp in enumerate(t) for e in comp}
        if degs:
            assert len(degs) == 1, "relation is not homogeneous"
            rel_terms.append((t, degs.pop()))
    out = []
    for d in range(dmax + 1):
        cols = [(e, c) for e in mons for c in range(rank) if wdeg(e) + gen_degrees[c] == d]
        index = {col: k for k, col in enumerate(cols)}
        rows = []
        for t, deg in rel_terms:
            for beta in mons:
                if wdeg(beta) + deg != d:
                    continue
                row = {}
                for c, comp in enumerate(t):
                    for e, v in comp.items():
                        row[index[(tuple(a + b for a, b in zip(e, beta)), c)]] = v
                rows.append(row)
        out.append(len(cols) - _rank(rows, len(cols)))
    return out
