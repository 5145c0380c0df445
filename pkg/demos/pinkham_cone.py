"""The cone over the rational normal quartic, a surface that is not a complete
intersection.  Its homological index comes from the Poincare series of the
modules of differentials; with the radial index 3 (a Milnor-fibre fact, not
computed here) it gives nu = 10.

    python demos/pinkham_cone.py
"""

from homindex import alternating_euler, load_germ
from homindex.indices import graded_complex_series, hom_index_graded

germ, form, _ = load_germ("corpus:pinkham_cone")
print(germ.name)
for f in germ.equations:
    print("   ", f)

series = graded_complex_series(germ)
for p, s in enumerate(series):
    print(f"Omega^{p}: {s.series}")
    print(f"    prefix {s.prefix}")

print("sum (-1)^i P_i(1)             =", alternating_euler(series))
print("sum (-1)^i t^i P_i(t) at t = 1 =", alternating_euler(series, (0, 1, 2)))

hom = hom_index_graded(germ, form, series)
print(f"homological index of {form}: {hom}")
print("nu with radial index 3:", hom - 3)
