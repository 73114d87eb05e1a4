"""Exact Alexander polynomials, Seiberg-Witten invariants and basic-class
statistics for link surgery along the closed braids B_{p,q} plus axis."""

from .alexander import alexander_closed_form, alexander_general, alexander_via_determinant, symmetrize
from .braid import BraidWord, FamilyParams, PolyMatrix, braid_matrix, burau_generator, determinant, torus_family_braid
from .classify import BasicClassReport, LatticeCount, basic_classes, count_formula, distinguish_q2, lambda_set
from .ring import LaurentPolynomial, VariableMismatchError, dumps, loads
from .swcalc import SWInvariant, collapse_count, sw_fiber_sum_general, sw_link_surgery

__all__ = [
    "LaurentPolynomial",
    "VariableMismatchError",
    "dumps",
    "loads",
    "BraidWord",
    "FamilyParams",
    "PolyMatrix",
    "burau_generator",
    "braid_matrix",
    "torus_family_braid",
    "determinant",
    "alexander_via_determinant",
    "alexander_closed_form",
    "alexander_general",
    "symmetrize",
    "SWInvariant",
    "sw_link_surgery",
    "sw_fiber_sum_general",
    "collapse_count",
    "BasicClassReport",
    "LatticeCount",
    "basic_classes",
    "count_formula",
    "lambda_set",
    "distinguish_q2",
]
