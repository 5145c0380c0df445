"""Zeros of a 1-form split under perturbation but their number is conserved.

omega = x^2 dx + y dy on the cusp x^3 = y^2 vanishes only at 0, with index 7.
Adding eps*d(l) for a generic linear l leaves a zero of index 3 at 0; the
other 4 move away, and the global colength of the minors ideal still counts 7.

    python demos/conservation.py
"""

import random

from homindex import OneForm, egz_index, load_germ, minors_ideal
from homindex.indices import global_colength, random_linear_form

cusp, _, _ = load_germ("corpus:a2_cusp")
R = cusp.ring
x, y = R.gens()
omega = OneForm((x**2, y))

print(f"omega = {omega}")
print("  index at 0:", egz_index(cusp, omega))
print("  all zeros:  ", global_colength(minors_ideal(cusp, omega), R))

rng = random.Random(1)
for eps in (1, 5, 25):
    w = omega + random_linear_form(R, rng).scale(eps)
    at0 = egz_index(cusp, w)
    total = global_colength(minors_ideal(cusp, w), R)
    print(f"eps = {eps:>2}: index at 0 {at0}, all zeros {total}, split off {total - at0}")
