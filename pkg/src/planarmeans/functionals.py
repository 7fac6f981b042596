"""Containment functionals of planar convex polygons.

Circumradius and inradius with respect to a gauge body, diameter and
width, the Minkowski asymmetry with its center and asymmetry points, and
the mean-body factors ``tau``, ``alpha`` and ``gamma``:

* ``tau(K)``   optimal factor with ``K ∩ (-K) ⊂ tau (K - K)/2``
* ``alpha(K)`` optimal factor with ``K ∩ (-K) ⊂ alpha conv(K ∪ -K)``
* ``gamma(K)`` optimal factor of the harmonic mean in ``conv(K ∪ -K)``,
  evaluated as ``tau`` of the polar body.

The three mean-body factors need no translation: both operands are
0-symmetric, and if ``P ⊂ t + rho Q`` with symmetric P and Q then also
``P ⊂ -t + rho Q``, so averaging gives ``P ⊂ rho Q``. Hence the optimal
factor is a maximum of gauge values over the vertices of the inner body.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import geom
from .errors import GaugeNotSymmetric, NotCentered, NotContained, OriginNotInterior, ZeroDirection
from .geom import ConvexPolygon
from .lp import LinearProgram, solve

CENTER_TOL = 1e-7
SPREAD_MARGIN = 1e-8


@dataclass(frozen=True)
class Touch:
    point: np.ndarray
    normal: np.ndarray
    weight: float


@dataclass(frozen=True)
class ContainmentResult:
    """``K ⊂ translation + rho * C`` (circumradius) or the reverse (inradius).

    ``touching`` lists the points of contact with unit outer normals of the
    outer body; their weights form a convex combination of the normals
    that vanishes, which certifies optimality.
    """

    rho: float
    translation: np.ndarray
    touching: list[Touch] = field(default_factory=list)

    def certificate_residual(self) -> float:
        """Norm of the weighted normal sum (0 for a valid certificate)."""
        if not self.touching:
            return float("inf")
        w = np.array([t.weight for t in self.touching])
        n = np.array([t.normal for t in self.touching])
        return float(np.linalg.norm((w / w.sum()) @ n))


@dataclass(frozen=True)
class AsymmetryResult:
    s: float
    center: np.ndarray
    asym_points: list[np.ndarray]
    asym_normals: list[np.ndarray]
    well_spread: bool


@dataclass(frozen=True)
class PseudoCompleteReport:
    is_pseudo_complete: bool
    r: float
    R: float
    D: float
    w: float
    s: float
    residuals: tuple[float, float, float]
    sandwich: bool | None = None

    @property
    def ratio(self) -> float:
        return self.D / self.w


# ---------------------------------------------------------------------------
# circumradius / inradius


def _touches(points, normals, weights) -> list[Touch]:
    total = float(sum(weights))
    return [
        Touch(np.asarray(p, float), np.asarray(n, float), float(w) / total)
        for p, n, w in zip(points, normals, weights)
    ]


def circumradius(K: ConvexPolygon, C: ConvexPolygon) -> ContainmentResult:
    """Smallest ``rho`` with ``K ⊂ t + rho C``.

    >>> sq = geom.make_polygon([(-1, -1), (1, -1), (1, 1), (-1, 1)])
    >>> round(circumradius(sq, sq).rho, 12)
    1.0
    """
    V = K.vertices
    a, b = C.normals, C.offsets
    nv, nf = len(V), len(b)
    # a.(v - t) <= rho b   <=>   -a.t - rho b <= -a.v
    rows = np.empty((nv * nf, 3))
    rows[:, :2] = -np.tile(a, (nv, 1))
    rows[:, 2] = -np.tile(b, nv)
    rhs = -(V @ a.T).reshape(-1)
    sol = solve(LinearProgram(np.array([0.0, 0.0, 1.0]), rows, rhs))
    if not sol.optimal:
        raise RuntimeError(f"circumradius LP ended {sol.status.value}")
    t, rho = sol.point[:2], float(sol.point[2])
    pts, nrm, wts = [], [], []
    for idx, y in sorted(sol.certificate.items()):
        i, j = divmod(idx, nf)
        pts.append(V[i])
        nrm.append(a[j])
        wts.append(y)
    return ContainmentResult(rho, t, _touches(pts, nrm, wts))


def inradius(K: ConvexPolygon, C: ConvexPolygon) -> ContainmentResult:
    """Largest ``rho`` with ``t + rho C ⊂ K``."""
    U = C.vertices
    a, b = K.normals, K.offsets
    nf, nu = len(b), len(U)
    # a.t + rho a.u <= b
    rows = np.empty((nf * nu, 3))
    rows[:, :2] = np.repeat(a, nu, axis=0)
    rows[:, 2] = (a @ U.T).reshape(-1)
    rhs = np.repeat(b, nu)
    sol = solve(LinearProgram(np.array([0.0, 0.0, -1.0]), rows, rhs))
    if not sol.optimal:
        raise RuntimeError(f"inradius LP ended {sol.status.value}")
    t, rho = sol.point[:2], float(sol.point[2])
    pts, nrm, wts = [], [], []
    for idx, y in sorted(sol.certificate.items()):
        k, l = divmod(idx, nu)
        pts.append(t + rho * U[l])
        nrm.append(a[k])
        wts.append(y)
    return ContainmentResult(rho, t, _touches(pts, nrm, wts))


def difference_body(K: ConvexPolygon) -> ConvexPolygon:
    return geom.minkowski_sum(K, geom.reflect(K))


def diameter(K: ConvexPolygon, C: ConvexPolygon) -> float:
    return 2.0 * circumradius(difference_body(K), difference_body(C)).rho


def width(K: ConvexPolygon, C: ConvexPolygon) -> float:
    return 2.0 * inradius(difference_body(K), difference_body(C)).rho


# ---------------------------------------------------------------------------
# Minkowski asymmetry


def _barycentric_margin(P: np.ndarray) -> float:
    """Smallest barycentric coordinate of 0 in the triangle ``P``."""
    M = np.vstack((P.T, np.ones(3)))
    if abs(np.linalg.det(M)) < 1e-14:
        return -np.inf
    lam = np.linalg.solve(M, np.array([0.0, 0.0, 1.0]))
    return float(lam.min())


def _zero_in_cone_hull(N: np.ndarray, tol: float = 1e-8) -> bool:
    """Whether 0 lies in the convex hull of the rows of ``N`` (k <= 3)."""
    k = len(N)
    for size in (2, 3):
        for S in itertools.combinations(range(k), size):
            M = np.vstack((N[list(S)].T, np.ones(size)))
            lam, *_ = np.linalg.lstsq(M, np.array([0.0, 0.0, 1.0]), rcond=None)
            if lam.min() >= -tol and np.linalg.norm(M @ lam - [0, 0, 1]) <= tol:
                return True
    return False


def _well_spread_triple(points, normals, preferred):
    """Pick three asymmetry points around 0 whose normals balance."""
    cand = list(preferred) + [i for i in range(len(points)) if i not in preferred]
    P = np.asarray(points)
    N = np.asarray(normals)
    for S in itertools.combinations(cand, 3):
        S = list(S)
        if _barycentric_margin(P[S]) > SPREAD_MARGIN and _zero_in_cone_hull(N[S]):
            return S
    return None


def asymmetry(K: ConvexPolygon) -> AsymmetryResult:
    """Minkowski asymmetry as one LP in ``(d, s)`` with ``d = (s+1) c``.

    ``K - c ⊂ s (c - K)`` holds iff ``a.d - s b <= a.v`` for every facet
    ``a.x <= b`` and vertex ``v`` of K.
    """
    V = K.vertices
    a, b = K.normals, K.offsets
    nv, nf = len(V), len(b)
    rows = np.empty((nv * nf, 3))
    rows[:, :2] = np.tile(a, (nv, 1))
    rows[:, 2] = -np.tile(b, nv)
    rhs = (V @ a.T).reshape(-1)
    sol = solve(LinearProgram(np.array([0.0, 0.0, 1.0]), rows, rhs))
    if not sol.optimal:
        raise RuntimeError(f"asymmetry LP ended {sol.status.value}")
    d, s = sol.point[:2], float(sol.point[2])
    c = d / (s + 1.0)

    # every tight (vertex, facet) pair yields a point of bd(K-c) ∩ -(K-c)/s
    pts, nrm, keys = [], [], []
    for idx in sol.tight_set:
        i, j = divmod(idx, nf)
        p = -(V[i] - c) / s
        pts.append(p)
        nrm.append(a[j])
        keys.append(idx)
    preferred = [keys.index(i) for i in sorted(sol.certificate)]
    triple = None
    if s > 1.0 + 1e-6:
        triple = _well_spread_triple(pts, nrm, preferred)
    chosen = triple if triple is not None else preferred
    return AsymmetryResult(
        s=s,
        center=c,
        asym_points=[pts[i] for i in chosen],
        asym_normals=[nrm[i] for i in chosen],
        well_spread=triple is not None,
    )


def minkowski_center(K: ConvexPolygon) -> np.ndarray:
    return asymmetry(K).center


def centered(K: ConvexPolygon) -> ConvexPolygon:
    """K translated so that its Minkowski center is the origin."""
    return geom.translate(K, -minkowski_center(K))


def centering_gap(K: ConvexPolygon, s: float | None = None) -> float:
    """Relative excess of ``max gauge_K(-v)`` over ``s(K)``; 0 iff centered."""
    if s is None:
        s = asymmetry(K).s
    if float(np.min(K.offsets)) <= geom.INTERIOR_TOL * K.scale:
        return np.inf
    g = float(np.max(geom.gauge_many(K, -K.vertices)))
    return g / s - 1.0


def require_centered(K: ConvexPolygon) -> float:
    """Return ``s(K)``; raise :class:`NotCentered` unless 0 is a Minkowski center."""
    s = asymmetry(K).s
    if centering_gap(K, s) > CENTER_TOL:
        raise NotCentered("body is not Minkowski centered at the origin")
    return s


# ---------------------------------------------------------------------------
# mean bodies and their containment factors


def minimum_body(K: ConvexPolygon) -> ConvexPolygon:
    """``K ∩ (-K)``."""
    return geom.intersect(K, geom.reflect(K))


def arithmetic_mean(K: ConvexPolygon) -> ConvexPolygon:
    """``(K - K) / 2``."""
    return geom.scale_translate(difference_body(K), 0.5)


def maximum_body(K: ConvexPolygon) -> ConvexPolygon:
    """``conv(K ∪ -K)``."""
    return geom.conv_union(K, geom.reflect(K))


def harmonic_mean(K: ConvexPolygon) -> ConvexPolygon:
    """``((K° - K°) / 2)°`` for K with 0 in its interior."""
    return geom.polar(arithmetic_mean(geom.polar(K)))


def symmetric_factor(inner: ConvexPolygon, outer: ConvexPolygon) -> tuple[float, np.ndarray]:
    """Optimal ``rho`` with ``inner ⊂ rho outer`` for 0-symmetric bodies.

    Returns the factor and the lexicographically smallest vertex of
    ``inner`` attaining it.
    """
    g = geom.gauge_many(outer, inner.vertices)
    top = float(g.max())
    hits = inner.vertices[g >= top - 1e-12 * max(1.0, top)]
    order = np.lexsort(hits.T[::-1])
    return top, hits[order[0]]


def tau_witness(K: ConvexPolygon) -> tuple[float, np.ndarray]:
    require_centered(K)
    return symmetric_factor(minimum_body(K), arithmetic_mean(K))


def tau(K: ConvexPolygon) -> float:
    """Optimal factor of ``K ∩ (-K)`` inside ``(K - K)/2``; K must be centered."""
    return tau_witness(K)[0]


def alpha(K: ConvexPolygon) -> float:
    """Optimal factor of ``K ∩ (-K)`` inside ``conv(K ∪ -K)``."""
    require_centered(K)
    return symmetric_factor(minimum_body(K), maximum_body(K))[0]


def gamma(K: ConvexPolygon) -> float:
    """Optimal factor of the harmonic mean inside ``conv(K ∪ -K)``."""
    try:
        P = geom.polar(K)
    except OriginNotInterior:
        raise
    require_centered(K)
    return tau(P)


def gamma_direct(K: ConvexPolygon) -> float:
    """Independent evaluation of :func:`gamma` via the harmonic mean body."""
    require_centered(K)
    return symmetric_factor(harmonic_mean(K), maximum_body(K))[0]


def rho_of_direction(K: ConvexPolygon, v) -> float:
    """``1 / gauge((K-K)/2, v)`` for ``v`` rescaled onto ``bd(K ∩ -K)``."""
    v = np.asarray(v, dtype=float)
    if not np.any(v):
        raise ZeroDirection("direction must be non-zero")
    require_centered(K)
    M = minimum_body(K)
    v = v / geom.gauge(M, v)
    return 1.0 / geom.gauge(arithmetic_mean(K), v)


# ---------------------------------------------------------------------------
# certificates and pseudo-completeness


@dataclass(frozen=True)
class OptimalityCertificate:
    optimal: bool
    rho: float
    touching: list[Touch]
    residual: float


def optimal_containment_check(K: ConvexPolygon, C: ConvexPolygon) -> OptimalityCertificate:
    """Decide whether ``K ⊂ C`` is optimal (no translate of a smaller C works)."""
    if not C.contains_polygon(K, 1e-9):
        raise NotContained("K is not contained in C")
    res = circumradius(K, C)
    return OptimalityCertificate(
        optimal=abs(res.rho - 1.0) <= 1e-7,
        rho=res.rho,
        touching=res.touching,
        residual=res.certificate_residual(),
    )


def _contains_scaled(outer: ConvexPolygon, inner: ConvexPolygon, tol: float) -> bool:
    return outer.contains_polygon(inner, tol)


def pseudo_complete_check(K: ConvexPolygon, C: ConvexPolygon, tol: float = 1e-7) -> PseudoCompleteReport:
    """Test ``r + R = D`` through the equality chain
    ``(s+1) r = r + R = (s+1) R / s = D``; gaps are relative to D."""
    if not geom.is_symmetric(C, 1e-8):
        raise GaugeNotSymmetric("the gauge body must be 0-symmetric")
    inr = inradius(K, C)
    r = inr.rho
    R = circumradius(K, C).rho
    D = diameter(K, C)
    w = width(K, C)
    s = asymmetry(K).s
    res = (
        abs((s + 1) * r - (r + R)) / D,
        abs((r + R) - (s + 1) * R / s) / D,
        abs((s + 1) * R / s - D) / D,
    )
    ok = max(res) <= tol
    sandwich = None
    if ok:
        c = inr.translation
        A = arithmetic_mean(K)
        mid = geom.scale_translate(C, 0.5 * D)
        outer = geom.scale_translate(geom.translate(K, -c), 0.5 * (s + 1))
        sandwich = _contains_scaled(mid, A, 1e-7) and _contains_scaled(outer, mid, 1e-7)
    return PseudoCompleteReport(ok, r, R, D, w, s, res, sandwich)


def measure(K: ConvexPolygon) -> tuple[float, float, ConvexPolygon]:
    """``(s, tau, centered K)`` for any polygon, with one asymmetry LP."""
    a = asymmetry(K)
    Kc = geom.translate(K, -a.center)
    if centering_gap(Kc, a.s) > CENTER_TOL:
        raise NotCentered("centering by the LP center failed")
    t = symmetric_factor(minimum_body(Kc), arithmetic_mean(Kc))[0]
    return a.s, t, Kc
