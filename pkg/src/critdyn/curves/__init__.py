"""Curve models, point counts, Jacobian orders and map verification."""
from .chains import DiscriminantChain, discriminant_chain
from .data import curve, curve_map, curve_maps, curves
from .ec import ECGroup, InfiniteOrder, ec_order_of_point
from .maps import CurveMap, MapReport, verify_curve_map
from .models import (
    AffineCurveModel,
    EllipticCurveW,
    HyperellipticModel,
    PlaneCurveModel,
    SpaceCurveModel,
    count_points,
    mumford_consistency,
    on_curve,
)
from .reduction import ReductionReport, reduction_injection_report
from .zeta import BadReduction, jacobian_order, l_polynomial

__all__ = [
    "curve", "curve_map", "curve_maps", "curves", "ECGroup", "InfiniteOrder", "ec_order_of_point",
    "CurveMap", "MapReport", "verify_curve_map", "AffineCurveModel", "EllipticCurveW",
    "HyperellipticModel", "PlaneCurveModel", "SpaceCurveModel", "count_points",
    "mumford_consistency", "on_curve", "BadReduction", "jacobian_order", "l_polynomial",
    "DiscriminantChain", "discriminant_chain", "ReductionReport", "reduction_injection_report",
]
