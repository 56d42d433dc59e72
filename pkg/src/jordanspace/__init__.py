"""Digital Jordan curves in Khalimsky and Marcus-Wyse planes, and the finite space they form."""

from .curve_space import CurveSpace, build_poset, minimal_curve_space, space_report
from .enumerate import count_3xn, count_grid_cycles, enumerate_curves
from .homotopy import Fence, Parameterization, curve_leq, minimal_path, minimalize, morph, shrink, standard_parameterization
from .jordan import JordanCurve, cyclic_order, is_jordan_curve, lemma_checks, minimal_curve
from .planes import DigitalPlane, make_cots, make_khalimsky_plane, make_marcus_wyse_plane
from .poset import FiniteSpace, core, dual, is_contractible, is_weak_point, product

__all__ = [
    "CurveSpace",
    "DigitalPlane",
    "Fence",
    "FiniteSpace",
    "JordanCurve",
    "Parameterization",
    "build_poset",
    "core",
    "count_3xn",
    "count_grid_cycles",
    "curve_leq",
    "cyclic_order",
    "dual",
    "enumerate_curves",
    "is_contractible",
    "is_jordan_curve",
    "is_weak_point",
    "lemma_checks",
    "make_cots",
    "make_khalimsky_plane",
    "make_marcus_wyse_plane",
    "minimal_curve",
    "minimal_curve_space",
    "minimal_path",
    "minimalize",
    "morph",
    "product",
    "shrink",
    "space_report",
    "standard_parameterization",
]
