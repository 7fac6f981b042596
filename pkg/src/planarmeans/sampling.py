"""Seeded random convex polygons."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import geom
from .errors import DegenerateInput
from .geom import ConvexPolygon


class HullMode(enum.Enum):
    UNIT_CIRCLE = "unit-circle"  # hull of uniform points on the unit circle
    GAUSSIAN = "gaussian"  # hull of standard normal points


@dataclass(frozen=True)
class RandomPolygonSpec:
    seed: int
    num_vertices: int = 8
    mode: HullMode = HullMode.UNIT_CIRCLE

    def __post_init__(self):
        if not 3 <= self.num_vertices <= 64:
            raise ValueError("num_vertices must lie in [3, 64]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        object.__setattr__(self, "mode", HullMode(self.mode))


def random_polygon(spec: RandomPolygonSpec) -> ConvexPolygon:
    """Hull of ``num_vertices`` random points; redraws degenerate hulls.

    >>> P = random_polygon(RandomPolygonSpec(seed=1, num_vertices=8))
    >>> P.vertices.tolist() == random_polygon(RandomPolygonSpec(1, 8)).vertices.tolist()
    True
    """
    rng = np.random.default_rng(spec.seed)
    n = spec.num_vertices
    while True:
        if spec.mode is HullMode.UNIT_CIRCLE:
            theta = rng.uniform(0.0, 2 * np.pi, n)
            pts = np.column_stack((np.cos(theta), np.sin(theta)))
        else:
            pts = rng.standard_normal((n, 2))
        try:
            P = geom.make_polygon(pts)
        except DegenerateInput:
            continue
        # reject slivers whose facets are numerically unreliable
        if P.area > 1e-6 * P.scale**2:
            return P
