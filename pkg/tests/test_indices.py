import random

import pytest
import sympy

from homindex.curves import radial_index_curve
from homindex.differentials import OneForm, VarietyGerm, kaehler_presentation, minors_ideal
from homindex.errors import NonIsolatedError, PreconditionError
from homindex.exactalg import PolyRing
from homindex.indices import (IndexReport, egz_index, global_colength, graded_complex_series,
                              hom_index_curve, hom_index_graded, milnor_hypersurface, minimized_index,
                              nu_curve, nu_direct_curve, random_linear_form, random_nonlinear_form,
                              tjurina_hypersurface)

from conftest import PARAM_CURVES, PLANE_CURVES, load
from oracles import local_module_colength, to_sympy

R = PolyRing(["x", "y"])
x, y = R.gens()
DL = OneForm((R.one(), R.one()))

MU = {"a1_node": 1, "a2_cusp": 2, "a3_tacnode": 3, "e6": 6, "d4_triple_point": 4}
NU = dict(MU, axes3=3, monomial345=5, smooth_line=0)


def test_egz_examples():
    assert egz_index(VarietyGerm(R, [x**3 - y**2], 1, icis=True), DL) == 3
    assert egz_index(VarietyGerm(R, [x * y], 1, icis=True), DL) == 2
    assert egz_index(VarietyGerm(R, [], 2, icis=True), OneForm((x, y))) == 1
    with pytest.raises(NonIsolatedError):
        egz_index(VarietyGerm(R, [], 2, icis=True), OneForm((x * y, R.zero())))


def test_hom_curve_examples():
    for name, value in [("a2_cusp", 3), ("a1_node", 2)]:
        germ, _, _ = load(name)
        assert hom_index_curve(germ, random_linear_form(germ.ring, random.Random(1))) == value
    line, _, _ = load("smooth_line")
    assert hom_index_curve(line, OneForm((line.ring.gen(0),))) == 1
    pinkham, form, _ = load("pinkham_cone")
    with pytest.raises(PreconditionError):
        hom_index_curve(pinkham, form)


def _module_oracle(germ, form):
    syms = sympy.symbols(germ.ring.names)
    pres = kaehler_presentation(germ, 1)
    elements = [tuple(to_sympy(p, syms) for p in rel) for rel in pres.relations]
    elements.append(tuple(to_sympy(a, syms) for a in form.coefficients))
    return local_module_colength(elements, pres.rank, syms)


@pytest.mark.parametrize("name", PARAM_CURVES)
def test_hom_curve_matches_module_oracle(name):
    germ, form, _ = load(name)
    assert hom_index_curve(germ, form) == _module_oracle(germ, form)


@pytest.mark.parametrize("name", ["a2_cusp", "d4_triple_point", "axes3", "monomial345"])
def test_hom_curve_nonlinear_forms_match_oracle(name):
    germ, _, _ = load(name)
    rng = random.Random(29)
    for _ in range(2):
        form = random_nonlinear_form(germ.ring, rng)
        assert hom_index_curve(germ, form) == _module_oracle(germ, form)


def test_graded_examples():
    pinkham, form, _ = load("pinkham_cone")
    series = graded_complex_series(pinkham)
    assert hom_index_graded(pinkham, form, series) == 13
    assert hom_index_graded(pinkham, random_linear_form(pinkham.ring, random.Random(5)), series) == 13
    L = PolyRing(["x"])
    assert hom_index_graded(VarietyGerm(L, [], 1, weights=(1,)), OneForm((L.one(),))) == 0
    assert hom_index_graded(VarietyGerm(L, [], 1, weights=(1,)), OneForm((L.gen(0),))) == 1


@pytest.mark.parametrize("coeffs,value", [((x**2, y), 7), ((y, x), 6), ((R.zero(), R.one()), 4)])
def test_graded_equals_curve_route(coeffs, value):
    cusp, _, _ = load("a2_cusp")
    omega = OneForm(coeffs)
    assert hom_index_graded(cusp, omega) == hom_index_curve(cusp, omega) == egz_index(cusp, omega) == value


def test_graded_rejects_inhomogeneous_form():
    cusp, _, _ = load("a2_cusp")
    with pytest.raises(PreconditionError):
        hom_index_graded(cusp, DL)


@pytest.mark.parametrize("f,mu", [(x**3 - y**2, 2), (x * y, 1), (x**3 + y**4, 6)])
def test_milnor_examples(f, mu):
    assert milnor_hypersurface(f) == mu


def test_milnor_non_isolated():
    with pytest.raises(NonIsolatedError):
        milnor_hypersurface(x**2)


def test_tjurina_quasihomogeneous():
    assert tjurina_hypersurface(x**3 + y**4) == 6
    assert tjurina_hypersurface(x**5 + y**5 + x**3 * y**3) == 15


@pytest.mark.parametrize("name", PARAM_CURVES)
def test_nu_values(name):
    germ, _, param = load(name)
    assert nu_curve(germ, param, seed=0) == NU[name]
    assert nu_direct_curve(germ) == NU[name]


@pytest.mark.parametrize("name", PARAM_CURVES)
def test_nu_independent_of_form(name):
    germ, _, param = load(name)
    rng = random.Random(name)
    forms = [random_linear_form(germ.ring, rng) for _ in range(3)]
    forms += [random_nonlinear_form(germ.ring, rng) for _ in range(3)]
    values = {hom_index_curve(germ, w) - radial_index_curve(w, param) for w in forms}
    assert values == {NU[name]}


@pytest.mark.parametrize("name", PLANE_CURVES)
def test_egz_equals_hom_plane_curves(name):
    germ, _, _ = load(name)
    rng = random.Random(17)
    for form in [random_linear_form(germ.ring, rng), random_nonlinear_form(germ.ring, rng)]:
        assert egz_index(germ, form) == hom_index_curve(germ, form)


def test_conservation_of_number():
    # omega = x^2 dx + y dy has its only zero on the cusp at 0, of index 7;
    # perturbing by eps*d(l) (or eps*d(l + q)) leaves index 3 at 0 and the
    # other 4 zeros elsewhere: the global colength is conserved
    cusp, _, _ = load("a2_cusp")
    omega = OneForm((x**2, y))
    total = egz_index(cusp, omega)
    assert global_colength(minors_ideal(cusp, omega), R) == total == 7
    rng = random.Random(23)
    for eps in (1, 3):
        l = random_linear_form(R, rng)
        q = OneForm.differential(rng.randint(1, 9) * x**2 - rng.randint(1, 9) * x * y + rng.randint(1, 9) * y**2)
        for pert in (l, l + q):
            perturbed = omega + pert.scale(eps)
            at_zero = egz_index(cusp, perturbed)
            assert at_zero == 3
            assert global_colength(minors_ideal(cusp, perturbed), R) == total
            assert hom_index_curve(cusp, perturbed) == at_zero


def test_minimized_index():
    cusp, _, _ = load("a2_cusp")
    omega = OneForm((x**2, y))
    assert minimized_index(lambda w: egz_index(cusp, w), omega, R, seed=0) == 3


def test_report_serialization():
    rep = IndexReport("cusp", form="dx + dy", seed=0, egz=3, hom=3, radial=1, nu=2)
    d = rep.to_dict()
    assert d["schema"] == 1
    assert d["values"] == {"egz": 3, "hom": 3, "radial": 1, "nu": 2}
    assert d["consistency"] == {"egz_equals_hom": True, "nu_is_hom_minus_radial": True}
    bad = IndexReport("x", egz=3, hom=4)
    assert bad.consistency() == {"egz_equals_hom": False}
