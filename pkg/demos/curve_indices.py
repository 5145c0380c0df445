"""Indices of 1-forms on plane and space curves.

Runs every index the package knows on the shipped curve germs and checks the
relations between them: the minors-ideal index equals the homological index,
and hom - radial (= nu) does not depend on the form and equals both the
Milnor number (plane curves) and dim Omega^1/dO.

    python demos/curve_indices.py
"""

import random

from homindex import (egz_index, hom_index_curve, load_germ, milnor_hypersurface, nu_direct_curve,
                      radial_index_curve, torsion_tau)
from homindex.indices import random_linear_form, random_nonlinear_form


def show_curve(name):
    germ, form, param = load_germ(f"corpus:{name}")
    print(f"{germ.name}: {', '.join(str(f) for f in germ.equations)}")
    print(f"  branches: {param.r}, multiplicities {[param.multiplicity(i) for i in range(param.r)]}")

    hom = hom_index_curve(germ, form)
    rad = radial_index_curve(form, param)
    line = f"  omega = {form}: hom {hom}, radial {rad}"
    if germ.icis:
        line += f", egz {egz_index(germ, form)}"
    print(line)

    rng = random.Random(0)
    nus = set()
    for w in [random_linear_form(germ.ring, rng) for _ in range(2)] + [random_nonlinear_form(germ.ring, rng)]:
        nus.add(hom_index_curve(germ, w) - radial_index_curve(w, param))
    print(f"  hom - radial over three random forms: {sorted(nus)}")
    print(f"  dim Omega^1/dO: {nu_direct_curve(germ)}   torsion of Omega^1: {torsion_tau(germ, param)}")
    if len(germ.equations) == 1:
        print(f"  Milnor number: {milnor_hypersurface(germ.equations[0])}")
    print()


if __name__ == "__main__":
    for name in ["a1_node", "a2_cusp", "a3_tacnode", "e6", "d4_triple_point", "axes3", "monomial345"]:
        show_curve(name)
