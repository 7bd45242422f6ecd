"""Routh–Hurwitz 판정, 고유값, Hopf 후보 공식"""

from steadycert.stability.classify import StabilityReport, classify, curve_sign, exact_hurwitz_data
from steadycert.stability.eigen import eigen_closed_form, eigen_numeric, relative_discrepancy
from steadycert.stability.hopf import HopfFormula, HopfScanReport, hopf_falsify, hopf_formula_build
from steadycert.stability.hurwitz import hurwitz_determinants, hurwitz_matrix, routh_hurwitz_stable

__all__ = [
    "HopfFormula",
    "HopfScanReport",
    "StabilityReport",
    "classify",
    "curve_sign",
    "eigen_closed_form",
    "eigen_numeric",
    "exact_hurwitz_data",
    "hopf_falsify",
    "hopf_formula_build",
    "hurwitz_determinants",
    "hurwitz_matrix",
    "relative_discrepancy",
    "routh_hurwitz_stable",
]
