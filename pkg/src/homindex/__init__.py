"""Indices of holomorphic 1-forms on isolated singularities, computed exactly.

The minors-ideal (EGZ) index, the homological index, the radial index of
parametrized curves and nu = hom - radial, on top of a small exact kernel:
rational polynomials, monomial orders, Buchberger/Mora standard bases and
Hilbert-Poincare series.
"""

from .curves import CurveParametrization, pullback_form, radial_index_curve, torsion_tau
from .differentials import OneForm, VarietyGerm, kaehler_presentation, minors_ideal, wedge_matrix
from .dimension import INFINITE, GradedPresentation, alternating_euler, poincare_series, quotient_dimension
from .errors import HomIndexError
from .exactalg import PolyRing, Polynomial, RationalFunction, TruncatedSeries, series_compose, series_order
from .germfile import format_germ, load_germ, parse_germ
from .indices import (IndexReport, egz_index, hom_index_curve, hom_index_graded, milnor_hypersurface,
                      nu_curve, nu_direct_curve, tjurina_hypersurface)
from .orders import ModuleOrder, MonomialOrder
from .stdbasis import Submodule, leading_module, normal_form, standard_basis

__version__ = "0.1.0"
