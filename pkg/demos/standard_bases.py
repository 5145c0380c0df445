"""Local against global: the same ideal has different colengths in the
polynomial ring and in the local ring at 0.  Mora's normal form and the
standard basis routines behind every index are shown on small examples.

    python demos/standard_bases.py
"""

from homindex import MonomialOrder, PolyRing, Submodule, normal_form, quotient_dimension, standard_basis
from homindex.stdbasis import leading_module

R = PolyRing(["x", "y"])
x, y = R.gens()
local = MonomialOrder("local")
global_ = MonomialOrder("degrevlex")


def colengths(gens):
    out = []
    for order in (local, global_):
        sb = standard_basis(Submodule(1, gens, order, ring=R))
        out.append((quotient_dimension(sb), leading_module(sb)))
    return out


examples = {
    "Jacobian of x^3 - y^2": [3 * x**2, -2 * y],
    "cusp with dx + dy": [x**3 - y**2, 3 * x**2 + 2 * y],
    "x^2 - x^3, y": [x**2 - x**3, y],
    "xy, y - x": [x * y, y - x],
}
for label, gens in examples.items():
    (loc, lloc), (glob, lglob) = colengths(gens)
    print(f"{label:24s} local {loc:>3}  global {glob:>3}   leads {[e for e, _ in lloc]} / {[e for e, _ in lglob]}")

# x^2 - x^3 = x^2 (1 - x): the factor 1 - x is a unit at 0 but not globally
print()
print("normal form of y modulo y - x^2 (local):", normal_form(y, Submodule(1, [y - x**2], local, ring=R))[0])
print("normal form of x^2 + y modulo x (global):", normal_form(x**2 + y, Submodule(1, [x], global_, ring=R))[0])
