"""Asymmetry, mean-body factors and diameter/width bounds for convex polygons."""

from .bounds import CONSTANTS, PHI, S_HAT, TAU_HAT, c_of_s, dw_envelope, s_max, tau_lower
from .canonical import canonicalize
from .errors import GeometryError
from .extremal import dw_witness, extremal_for, f_transform, golden_house, heptagon, k_s
from .functionals import (
    alpha,
    asymmetry,
    centered,
    circumradius,
    diameter,
    gamma,
    inradius,
    pseudo_complete_check,
    tau,
    width,
)
from .geom import ConvexPolygon, make_polygon, read_polygon, write_polygon
from .sampling import HullMode, RandomPolygonSpec, random_polygon

__all__ = [
    "CONSTANTS", "PHI", "S_HAT", "TAU_HAT", "c_of_s", "dw_envelope", "s_max", "tau_lower",
    "canonicalize", "GeometryError",
    "dw_witness", "extremal_for", "f_transform", "golden_house", "heptagon", "k_s",
    "alpha", "asymmetry", "centered", "circumradius", "diameter", "gamma", "inradius",
    "pseudo_complete_check", "tau", "width",
    "ConvexPolygon", "make_polygon", "read_polygon", "write_polygon",
    "HullMode", "RandomPolygonSpec", "random_polygon",
]
