"""Exact root-system combinatorics: Kostant cascades and stabilizer Poincare polynomials."""

from .errors import CharacterizationMismatch, InvalidArgs, NotDivisible, NotFinite, TooLarge
from .qpoly import IntPoly, add, exact_div, gaussian, mul
from .rootsys import RootSystem, SimpleType, Weight, all_types, build, classify_subdiagram, extended_diagram, pairing
from .weyl import brute_force_poincare, poincare, poincare_quotient
from .cascade import Xi, build_cascade, check_interval, xi_entries
from .stab import affine_stab_poincare, ell, ji_split, make_face
from .theorem import inclusions_check, tau_transfer_check, verify_all, verify_identity, xi_lambda

__all__ = [
    "CharacterizationMismatch", "InvalidArgs", "NotDivisible", "NotFinite", "TooLarge",
    "IntPoly", "add", "exact_div", "gaussian", "mul",
    "RootSystem", "SimpleType", "Weight", "all_types", "build", "classify_subdiagram",
    "extended_diagram", "pairing",
    "brute_force_poincare", "poincare", "poincare_quotient",
    "Xi", "build_cascade", "check_interval", "xi_entries",
    "affine_stab_poincare", "ell", "ji_split", "make_face",
    "inclusions_check", "tau_transfer_check", "verify_all", "verify_identity", "xi_lambda",
]
