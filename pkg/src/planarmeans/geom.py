"""Planar convex polygons.

A :class:`ConvexPolygon` stores its vertices counter-clockwise as an
``(n, 2)`` float array. The H-representation (unit outward normals and
offsets) is computed on first use and cached, since every containment LP
needs both representations.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegenerateInput,
    EmptyOrDegenerateIntersection,
    OriginNotInterior,
    ParseError,
    SingularMap,
    ZeroDirection,
)

# sine of the smallest turning angle kept at a vertex
CONVEXITY_TOL = 1e-10
# relative distance below which two vertices are merged
MERGE_TOL = 1e-12
# minimal distance from the origin to every facet for gauge/polar
INTERIOR_TOL = 1e-9


def _cross(o: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _scale_of(points: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(points))))


def _clean_cycle(cycle: np.ndarray) -> np.ndarray:
    """Drop near-duplicate and near-collinear vertices of a convex CCW cycle."""
    pts = np.asarray(cycle, dtype=float)
    scale = _scale_of(pts)
    while len(pts) >= 3:
        # duplicates first: their edge direction is noise
        step = np.linalg.norm(np.roll(pts, -1, axis=0) - pts, axis=1)
        dup = step <= MERGE_TOL * scale
        if dup.any():
            pts = pts[~dup]
            continue
        e1 = pts - np.roll(pts, 1, axis=0)
        e2 = np.roll(pts, -1, axis=0) - pts
        sin = (e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0]) / (
            np.linalg.norm(e1, axis=1) * np.linalg.norm(e2, axis=1)
        )
        flat = sin <= CONVEXITY_TOL
        if not flat.any():
            break
        # remove flagged vertices whose predecessor stays, so no two
        # neighbours vanish on stale angles
        drop = np.zeros(len(pts), dtype=bool)
        for i in np.flatnonzero(flat):
            if i == 0 or not drop[i - 1]:
                drop[i] = True
        if drop[0] and drop[-1]:
            drop[-1] = False
        pts = pts[~drop]
    return pts.reshape(-1, 2)


def _hull(points: np.ndarray) -> np.ndarray:
    """Andrew's monotone chain; returns a CCW cycle without collinear points."""
    pts = np.unique(points, axis=0)
    if len(pts) < 3:
        raise DegenerateInput("fewer than 3 distinct points")
    pts = pts[np.lexsort((pts[:, 1], pts[:, 0]))]
    lower: list[np.ndarray] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[np.ndarray] = []
    for p in pts[::-1]:
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    cycle = np.array(lower[:-1] + upper[:-1], dtype=float)
    if len(cycle) < 3:
        raise DegenerateInput("points are collinear")
    cycle = _clean_cycle(cycle)
    if len(cycle) < 3:
        raise DegenerateInput("hull is lower-dimensional")
    return cycle


def _signed_area(v: np.ndarray) -> float:
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


@dataclass(frozen=True)
class HalfPlane:
    """The set ``{x : normal . x <= offset}`` with a unit outward normal."""

    normal: np.ndarray
    offset: float

    def contains(self, x, tol: float = 1e-9) -> bool:
        return float(np.dot(self.normal, x)) <= self.offset + tol


class ConvexPolygon:
    """Full-dimensional convex polygon with CCW, strictly convex vertices.

    The constructor validates an already-canonical vertex cycle; use
    :func:`make_polygon` to build one from an arbitrary point cloud.
    """

    def __init__(self, vertices, *, _validated: bool = False):
        v = np.array(vertices, dtype=float).reshape(-1, 2)
        if not _validated:
            _validate_cycle(v)
        v.setflags(write=False)
        self._v = v

    @property
    def vertices(self) -> np.ndarray:
        return self._v

    def __len__(self) -> int:
        return len(self._v)

    def __repr__(self) -> str:
        pts = ", ".join(f"({x:.6g}, {y:.6g})" for x, y in self._v)
        return f"ConvexPolygon([{pts}])"

    @cached_property
    def edges(self) -> np.ndarray:
        return np.roll(self._v, -1, axis=0) - self._v

    @cached_property
    def normals(self) -> np.ndarray:
        e = self.edges
        n = np.column_stack((e[:, 1], -e[:, 0]))
        n /= np.linalg.norm(n, axis=1)[:, None]
        n.setflags(write=False)
        return n

    @cached_property
    def offsets(self) -> np.ndarray:
        b = np.einsum("ij,ij->i", self.normals, self._v)
        b.setflags(write=False)
        return b

    @cached_property
    def area(self) -> float:
        return _signed_area(self._v)

    @cached_property
    def centroid(self) -> np.ndarray:
        v = self._v
        w = np.roll(v, -1, axis=0)
        cr = v[:, 0] * w[:, 1] - w[:, 0] * v[:, 1]
        return ((v + w) * cr[:, None]).sum(axis=0) / (6.0 * self.area)

    @property
    def scale(self) -> float:
        return _scale_of(self._v)

    def contains(self, x, tol: float = 1e-9) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(self.normals @ x <= self.offsets + tol * self.scale))

    def contains_polygon(self, other: "ConvexPolygon", tol: float = 1e-9) -> bool:
        lhs = other.vertices @ self.normals.T
        slack = lhs - self.offsets[None, :]
        return bool(slack.max() <= tol * max(self.scale, other.scale))


def _validate_cycle(v: np.ndarray) -> None:
    if len(v) < 3:
        raise DegenerateInput("a polygon needs at least 3 vertices")
    if not np.all(np.isfinite(v)):
        raise DegenerateInput("non-finite coordinate")
    e1 = v - np.roll(v, 1, axis=0)
    e2 = np.roll(v, -1, axis=0) - v
    l1 = np.linalg.norm(e1, axis=1)
    l2 = np.linalg.norm(e2, axis=1)
    if np.any(l1 <= MERGE_TOL * _scale_of(v)):
        raise DegenerateInput("duplicate vertices")
    sin = (e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0]) / (l1 * l2)
    if np.any(sin <= CONVEXITY_TOL):
        raise DegenerateInput("vertex cycle is not strictly convex and CCW")
    if _signed_area(v) <= 0:
        raise DegenerateInput("zero area")


def make_polygon(points: Iterable[Sequence[float]]) -> ConvexPolygon:
    """Convex hull of ``points`` as a canonical polygon.

    >>> make_polygon([(0, 0), (2, 0), (1, 0), (0, 2)]).vertices.tolist()
    [[0.0, 0.0], [2.0, 0.0], [0.0, 2.0]]
    """
    pts = np.array(list(points) if not isinstance(points, np.ndarray) else points, dtype=float)
    pts = pts.reshape(-1, 2)
    if not np.all(np.isfinite(pts)):
        raise DegenerateInput("non-finite coordinate")
    return ConvexPolygon(_hull(pts), _validated=True)


def conv_union(*bodies: ConvexPolygon) -> ConvexPolygon:
    return make_polygon(np.vstack([b.vertices for b in bodies]))


def facets(K: ConvexPolygon) -> list[HalfPlane]:
    return [HalfPlane(n.copy(), float(b)) for n, b in zip(K.normals, K.offsets)]


def from_halfplanes(normals, offsets) -> ConvexPolygon:
    """Bounded intersection of half-planes ``normals @ x <= offsets``."""
    normals = np.asarray(normals, dtype=float).reshape(-1, 2)
    offsets = np.asarray(offsets, dtype=float).reshape(-1)
    tol = 1e-12 * max(1.0, float(np.max(np.abs(offsets))))
    pts = []
    m = len(offsets)
    for i in range(m):
        for j in range(i + 1, m):
            A = normals[[i, j]]
            if abs(np.linalg.det(A)) <= 1e-14:
                continue
            x = np.linalg.solve(A, offsets[[i, j]])
            if np.all(normals @ x <= offsets + tol):
                pts.append(x)
    if len(pts) < 3:
        raise EmptyOrDegenerateIntersection("half-planes have empty interior")
    try:
        return make_polygon(np.array(pts))
    except DegenerateInput as exc:
        raise EmptyOrDegenerateIntersection(str(exc)) from None


def support(K: ConvexPolygon, u) -> float:
    u = np.asarray(u, dtype=float)
    if not np.any(u):
        raise ZeroDirection("support direction must be non-zero")
    return float(np.max(K.vertices @ u))


def _clip(poly: np.ndarray, a: np.ndarray, b: float) -> np.ndarray:
    """Sutherland-Hodgman clip of a convex cycle by ``a . x <= b``."""
    if len(poly) == 0:
        return poly
    d = poly @ a - b
    eps = 1e-13 * max(1.0, abs(b), float(np.max(np.abs(poly))))
    inside = d <= eps
    if inside.all():
        return poly
    out = []
    n = len(poly)
    for i in range(n):
        j = (i + 1) % n
        if inside[i]:
            out.append(poly[i])
        if inside[i] != inside[j]:
            t = d[i] / (d[i] - d[j])
            out.append(poly[i] + t * (poly[j] - poly[i]))
    return np.array(out, dtype=float).reshape(-1, 2)


def intersect(K: ConvexPolygon, C: ConvexPolygon) -> ConvexPolygon:
    poly = np.array(K.vertices)
    for a, b in zip(C.normals, C.offsets):
        poly = _clip(poly, a, b)
        if len(poly) < 3:
            raise EmptyOrDegenerateIntersection("intersection is empty or degenerate")
    try:
        P = make_polygon(poly)
    except DegenerateInput:
        raise EmptyOrDegenerateIntersection("intersection is lower-dimensional") from None
    if P.area <= 1e-14 * max(K.scale, C.scale) ** 2:
        raise EmptyOrDegenerateIntersection("intersection has no area")
    return P


def _start_lowest(v: np.ndarray) -> np.ndarray:
    i = int(np.lexsort((v[:, 0], v[:, 1]))[0])
    return np.roll(v, -i, axis=0)


def minkowski_sum(K: ConvexPolygon, C: ConvexPolygon) -> ConvexPolygon:
    """K + C by merging the two edge sequences in angular order."""
    P = _start_lowest(K.vertices)
    Q = _start_lowest(C.vertices)
    n, m = len(P), len(Q)
    P = np.vstack((P, P[:2]))
    Q = np.vstack((Q, Q[:2]))
    out = []
    i = j = 0
    while i < n or j < m:
        out.append(P[i] + Q[j])
        ep = P[i + 1] - P[i]
        eq = Q[j + 1] - Q[j]
        cr = ep[0] * eq[1] - ep[1] * eq[0]
        if cr >= 0 and i < n:
            i += 1
        if cr <= 0 and j < m:
            j += 1
    return make_polygon(np.array(out))


def reflect(K: ConvexPolygon) -> ConvexPolygon:
    # a half-turn keeps the orientation, so the cycle stays CCW
    return ConvexPolygon(-K.vertices, _validated=True)


def scale_translate(K: ConvexPolygon, rho: float, t=(0.0, 0.0)) -> ConvexPolygon:
    if rho == 0 or not math.isfinite(rho):
        raise SingularMap("scaling factor must be non-zero")
    v = rho * K.vertices + np.asarray(t, dtype=float)
    return ConvexPolygon(v, _validated=True)


def translate(K: ConvexPolygon, t) -> ConvexPolygon:
    return ConvexPolygon(K.vertices + np.asarray(t, dtype=float), _validated=True)


def linear_map(K: ConvexPolygon, M) -> ConvexPolygon:
    M = np.asarray(M, dtype=float).reshape(2, 2)
    det = float(np.linalg.det(M))
    if abs(det) <= 1e-12 * max(1.0, float(np.max(np.abs(M)))) ** 2:
        raise SingularMap("linear map is singular")
    v = K.vertices @ M.T
    if det < 0:
        v = v[::-1]
    return make_polygon(v)


def _require_origin_interior(B: ConvexPolygon) -> None:
    if float(np.min(B.offsets)) <= INTERIOR_TOL:
        raise OriginNotInterior("0 must lie strictly inside the body")


def polar(K: ConvexPolygon) -> ConvexPolygon:
    """``K° = conv{a/b}`` over the facets ``a . x <= b`` of K."""
    _require_origin_interior(K)
    return make_polygon(K.normals / K.offsets[:, None])


def gauge(B: ConvexPolygon, x) -> float:
    _require_origin_interior(B)
    x = np.asarray(x, dtype=float)
    if not np.any(x):
        return 0.0
    return float(np.max((B.normals @ x) / B.offsets))


def gauge_many(B: ConvexPolygon, X) -> np.ndarray:
    """Row-wise gauge of the points ``X`` (shape ``(k, 2)``)."""
    _require_origin_interior(B)
    X = np.asarray(X, dtype=float).reshape(-1, 2)
    g = (X @ B.normals.T) / B.offsets[None, :]
    return np.maximum(g.max(axis=1), 0.0)


def same_polygon(K: ConvexPolygon, C: ConvexPolygon, tol: float = 1e-9) -> bool:
    """Vertex cycles equal up to cyclic rotation, coordinates within ``tol``."""
    if len(K) != len(C):
        return False
    a, b = K.vertices, C.vertices
    for k in range(len(a)):
        if np.max(np.abs(np.roll(b, -k, axis=0) - a)) <= tol:
            return True
    return False


def is_symmetric(K: ConvexPolygon, tol: float = 1e-8) -> bool:
    """Whether ``K = -K``, tested as ``-K ⊂ K`` (robust to merged vertices)."""
    return K.contains_polygon(reflect(K), tol)


# ---------------------------------------------------------------------------
# boundary crossings bd(K) ∩ bd(-K)


@dataclass(frozen=True)
class Crossing:
    """A point of ``bd(K) ∩ bd(-K)``.

    ``kind`` is ``"transversal"`` when the boundaries cross, ``"touching"``
    when K and -K share a supporting line there, and ``"arc"`` for an
    endpoint of a boundary segment shared by K and -K.
    """

    point: np.ndarray
    kind: str

    @property
    def transversal(self) -> bool:
        return self.kind == "transversal"

    @property
    def angle(self) -> float:
        return math.atan2(self.point[1], self.point[0]) % (2 * math.pi)


def _normal_cone(K: ConvexPolygon, x: np.ndarray, tol: float) -> tuple[float, float]:
    """Normal cone at a boundary point as ``(start angle, ccw width)``."""
    v = K.vertices
    d = np.linalg.norm(v - x, axis=1)
    i = int(np.argmin(d))
    angles = np.arctan2(K.normals[:, 1], K.normals[:, 0])
    if d[i] <= tol:
        a0 = angles[i - 1]  # edge ending at vertex i
        a1 = angles[i]
        return float(a0), float((a1 - a0) % (2 * math.pi))
    slack = np.abs(K.normals @ x - K.offsets)
    j = int(np.argmin(slack))
    return float(angles[j]), 0.0


def _arcs_overlap(c1: tuple[float, float], c2: tuple[float, float], tol: float) -> bool:
    def inside(a, cone):
        start, width = cone
        return ((a - start + tol) % (2 * math.pi)) <= width + 2 * tol

    return inside(c1[0], c2) or inside(c2[0], c1)


def boundary_crossings(K: ConvexPolygon, tol: float = 1e-9) -> list[Crossing]:
    """All points of ``bd(K) ∩ bd(-K)`` sorted by polar angle.

    Intended for Minkowski-centered K. A shared boundary segment (only
    possible when the minimum and maximum of K touch) is reported through
    its endpoints with kind ``"arc"``.
    """
    P = K.vertices
    Q = -P
    n = len(P)
    scale = K.scale
    ptol = tol * scale
    found: list[tuple[np.ndarray, str]] = []
    for i in range(n):
        a0, a1 = P[i], P[(i + 1) % n]
        da = a1 - a0
        for j in range(n):
            b0, b1 = Q[j], Q[(j + 1) % n]
            db = b1 - b0
            den = da[0] * db[1] - da[1] * db[0]
            la, lb = np.hypot(*da), np.hypot(*db)
            w = b0 - a0
            if abs(den) <= 1e-12 * la * lb:
                # parallel: overlap only if collinear
                if abs(da[0] * w[1] - da[1] * w[0]) / la > ptol:
                    continue
                u0 = np.dot(b0 - a0, da) / la**2
                u1 = np.dot(b1 - a0, da) / la**2
                lo, hi = max(0.0, min(u0, u1)), min(1.0, max(u0, u1))
                if hi - lo > ptol / la:
                    found.append((a0 + lo * da, "arc"))
                    found.append((a0 + hi * da, "arc"))
                elif hi - lo >= -ptol / la:
                    found.append((a0 + 0.5 * (lo + hi) * da, "point"))
                continue
            u = (w[0] * db[1] - w[1] * db[0]) / den
            v = (w[0] * da[1] - w[1] * da[0]) / den
            eu, ev = ptol / la, ptol / lb
            if -eu <= u <= 1 + eu and -ev <= v <= 1 + ev:
                found.append((a0 + min(max(u, 0.0), 1.0) * da, "point"))
    # merge duplicates, "arc" wins
    merged: list[list] = []
    for x, kind in found:
        for m in merged:
            if np.hypot(*(m[0] - x)) <= 10 * ptol:
                if kind == "arc":
                    m[1] = "arc"
                break
        else:
            merged.append([x, kind])
    negK = reflect(K)
    out = []
    for x, kind in merged:
        if kind == "point":
            c1 = _normal_cone(K, x, 10 * ptol)
            c2 = _normal_cone(negK, x, 10 * ptol)
            kind = "touching" if _arcs_overlap(c1, c2, tol) else "transversal"
        out.append(Crossing(np.array(x), kind))
    out.sort(key=lambda c: c.angle)
    return out


def transversal_crossings(K: ConvexPolygon) -> list[np.ndarray]:
    return [c.point for c in boundary_crossings(K) if c.transversal]


# ---------------------------------------------------------------------------
# JSON polygon files: {"vertices": [[x, y], ...]}


def polygon_to_dict(K: ConvexPolygon) -> dict:
    return {"vertices": [[float(x), float(y)] for x, y in K.vertices]}


def polygon_from_dict(data) -> ConvexPolygon:
    try:
        pts = data["vertices"]
        arr = np.array(pts, dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed polygon document: {exc}") from None
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ParseError("vertices must be a list of [x, y] pairs")
    return make_polygon(arr)


def write_polygon(K: ConvexPolygon, path) -> None:
    Path(path).write_text(json.dumps(polygon_to_dict(K), indent=2) + "\n")


def read_polygon(path) -> ConvexPolygon:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
    return polygon_from_dict(data)
