"""Exact arithmetic for stability conditions on coherent systems on curves."""

from .brillnoether import PiecewiseBound, evaluate, general_bound, genus4_bound, quadratic_dominates
from .charge import ChargeParams, ChargeValue, central_charge, compare_slopes, heart_slope, mu_slope
from .klattice import ClassVector, QuotientClass, euler_matrix, euler_pairing, project_mod_kernel
from .support import GENUS4_PARAMS, QuadFormParams, genus4_qform, qform

__all__ = [
    "ChargeParams",
    "ChargeValue",
    "ClassVector",
    "GENUS4_PARAMS",
    "PiecewiseBound",
    "QuadFormParams",
    "QuotientClass",
    "central_charge",
    "compare_slopes",
    "euler_matrix",
    "euler_pairing",
    "evaluate",
    "general_bound",
    "genus4_bound",
    "genus4_qform",
    "heart_slope",
    "mu_slope",
    "project_mod_kernel",
    "qform",
    "quadratic_dominates",
]
