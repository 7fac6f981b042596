"""Reduce a centered body with large asymmetry to the seven-point normal form.

For centered K with ``s = s(K) > phi`` the boundaries of K and -K cross in
exactly six points, and these interleave with the directions ``±p^i`` of
a well-spread asymmetry triple: between two consecutive crossings lies
exactly one of ``-p^1, p^2, -p^3, p^1, -p^2, p^3`` (in some rotation).
The crossing between ``-p^i`` and ``p^j`` is called ``z^{i,j}``; note
``z^{j,i} = -z^{i,j}``.

The pipeline never changes s and never decreases tau:

a) keep only ``K ∩ (-K)`` and the tips ``-s p^i``;
1) pull each ``p^i`` onto the chord ``[z^{i+1,i}, z^{i+2,i}]`` around it;
2) pick the crossing p where tau is attained, name the roles so that
   ``p = z^{3,2}``, and slide the tips ``-s p^3`` and ``s p^2`` along
   ``[z^{3,1}, p]`` and ``[z^{1,2}, p]`` onto the line through
   ``z^{2,1}, z^{3,1}``;
3) keep ``-s p^i``, ``p^2``, ``p^3`` and ``±p``;
4) move ``-s p^1`` along its line onto the ray of ``d^1``, where ``d^1``
   is the meeting point of ``aff{-p, p^3}`` and ``aff{p, p^2}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import bounds, geom
from . import functionals as fn
from .errors import AsymmetryTooSmall, CanonicalizationError, NotCentered
from .geom import ConvexPolygon

S_TOL = 1e-7
TAU_TOL = 1e-9


@dataclass(frozen=True)
class TraceStep:
    name: str
    body: ConvexPolygon
    s: float
    tau: float


@dataclass
class Trace:
    steps: list[TraceStep] = field(default_factory=list)
    points: dict[str, np.ndarray] = field(default_factory=dict)

    def record(self, name: str, body: ConvexPolygon, s_ref: float) -> TraceStep:
        try:
            t = fn.tau(body)
        except NotCentered as exc:
            raise CanonicalizationError(f"{name}: body lost its Minkowski center ({exc})") from None
        s = fn.asymmetry(body).s
        step = TraceStep(name, body, s, t)
        if abs(s - s_ref) > S_TOL:
            raise CanonicalizationError(f"{name}: asymmetry changed from {s_ref} to {s}")
        if self.steps and t < self.steps[-1].tau - TAU_TOL:
            raise CanonicalizationError(f"{name}: tau decreased from {self.steps[-1].tau} to {t}")
        self.steps.append(step)
        return step

    @property
    def s_values(self) -> list[float]:
        return [st.s for st in self.steps]

    @property
    def tau_values(self) -> list[float]:
        return [st.tau for st in self.steps]


def _angle(x) -> float:
    return math.atan2(x[1], x[0]) % (2 * math.pi)


def _meet(a1, a2, b1, b2) -> np.ndarray:
    """Intersection of the lines ``a1 a2`` and ``b1 b2``."""
    da, db = a2 - a1, b2 - b1
    den = da[0] * db[1] - da[1] * db[0]
    if abs(den) <= 1e-14 * np.linalg.norm(da) * np.linalg.norm(db):
        raise CanonicalizationError("parallel lines in construction")
    w = b1 - a1
    u = (w[0] * db[1] - w[1] * db[0]) / den
    return a1 + u * da


def label_crossings(crossings, triple) -> dict[tuple[int, int], np.ndarray]:
    """Name six crossings ``z^{i,j}`` (0-based roles) from an asymmetry triple.

    Raises :class:`CanonicalizationError` unless every angular gap between
    consecutive crossings contains exactly one of the directions ``±p^i``
    and each crossing sits between some ``-p^i`` and some ``p^j``.
    """
    Z = sorted((np.asarray(z, float) for z in crossings), key=_angle)
    if len(Z) != 6:
        raise CanonicalizationError(f"expected 6 boundary crossings, found {len(Z)}")
    markers = [(_angle(sg * np.asarray(p)), sg, i) for i, p in enumerate(triple) for sg in (1, -1)]
    gaps = []
    for k in range(6):
        a0, a1 = _angle(Z[k]), _angle(Z[(k + 1) % 6])
        width = (a1 - a0) % (2 * math.pi)
        inside = [(sg, i) for a, sg, i in markers if 0 < (a - a0) % (2 * math.pi) < width]
        if len(inside) != 1:
            raise CanonicalizationError("asymmetry directions do not interleave with the crossings")
        gaps.append(inside[0])
    labels = {}
    for k in range(6):
        before, after = gaps[k - 1], gaps[k]
        neg = [i for sg, i in (before, after) if sg < 0]
        pos = [i for sg, i in (before, after) if sg > 0]
        if len(neg) != 1 or len(pos) != 1 or neg[0] == pos[0]:
            raise CanonicalizationError("crossing is not flanked by -p^i and p^j")
        labels[(neg[0], pos[0])] = Z[k]
    if len(labels) != 6:
        raise CanonicalizationError("crossing labels are not distinct")
    return labels


def _crossings(K: ConvexPolygon) -> list[np.ndarray]:
    pts = geom.transversal_crossings(K)
    if len(pts) != 6:
        raise CanonicalizationError(f"expected 6 transversal crossings, found {len(pts)}")
    return pts


def _rho(K: ConvexPolygon, z) -> float:
    """``rho(z)`` for z on ``bd(K ∩ -K)``: gauge ratio of minimum to mean."""
    M = fn.minimum_body(K)
    A = fn.arithmetic_mean(K)
    return geom.gauge(M, z) / geom.gauge(A, z)


def canonicalize(K: ConvexPolygon) -> tuple[ConvexPolygon, Trace]:
    """Normal form with equal asymmetry and no smaller tau, plus a step trace.

    ``trace.points`` holds the final ``p, p1, p2, p3, d1``; the result is
    ``conv{±p, p2, p3, -s p1, -s p2, -s p3}``.
    """
    s = fn.require_centered(K)
    if s <= bounds.PHI + 1e-6:
        raise AsymmetryTooSmall(f"s={s} does not exceed the golden ratio")
    asym = fn.asymmetry(K)
    if not asym.well_spread:
        raise CanonicalizationError("no well-spread asymmetry triple found")
    P = np.array(asym.asym_points)
    trace = Trace()
    trace.record("input", K, s)

    # a) minimum body plus the three tips
    Ka = geom.make_polygon(np.vstack((fn.minimum_body(K).vertices, -s * P)))
    trace.record("minimum+tips", Ka, s)
    Z = label_crossings(_crossings(Ka), P)

    # 1) shrink p^i onto the chord of the two crossings flanking it
    gam = np.empty(3)
    for i in range(3):
        a, b = Z[((i + 1) % 3, i)], Z[((i + 2) % 3, i)]
        hit = _meet(np.zeros(2), P[i], a, b)
        gam[i] = float(hit @ P[i]) / float(P[i] @ P[i])
    P1 = gam[:, None] * P
    K1 = geom.make_polygon(np.vstack([-s * P1] + list(Z.values())))
    trace.record("step1", K1, s)

    # choose p among the crossings of K1 and assign roles so that p = z^{3,2}
    Z1 = label_crossings(_crossings(K1), P1)
    keyed = sorted(Z1.items(), key=lambda kv: (round(_rho(K1, kv[1]), 12), kv[1][0], kv[1][1]))
    (k, j), p = keyed[0]
    rest = 3 - k - j
    order = [rest, j, k]  # new role r holds old index order[r]
    inv = {old: new for new, old in enumerate(order)}
    P1 = P1[order]
    Z1 = {(inv[a], inv[b]): z for (a, b), z in Z1.items()}

    # 2) slide the tips -s p^3 and s p^2 onto the line through z^{2,1}, z^{3,1}
    z12, z13, z21, z31 = Z1[(0, 1)], Z1[(0, 2)], Z1[(1, 0)], Z1[(2, 0)]
    p3_hat = -_meet(z31, p, z21 / s, z31 / s)
    p2_hat = _meet(z12, p, z12 / s, z13 / s)
    K2 = geom.make_polygon(np.vstack([-s * P1[0], -s * p2_hat, -s * p3_hat] + list(Z1.values())))
    trace.record("step2", K2, s)
    p1, p2, p3 = P1[0], p2_hat, p3_hat

    # 3) restrict to the seven named points
    K3 = geom.make_polygon([-s * p1, -s * p2, -s * p3, p2, p3, p, -p])
    trace.record("step3", K3, s)

    # 4) move -s p^1 onto the ray through d^1
    d1 = _meet(-p, p3, p, p2)
    p1_star = _meet(np.zeros(2), -d1, -s * p2, -s * p3)
    Kbar = geom.make_polygon([-s * p1_star, -s * p2, -s * p3, p2, p3, p, -p])
    trace.record("step4", Kbar, s)
    trace.points.update(p=p, p1=p1_star, p2=p2, p3=p3, d1=d1)
    return Kbar, trace


def has_normal_form(Kbar: ConvexPolygon, points: dict[str, np.ndarray], s: float, tol: float = 1e-9) -> bool:
    """Whether every vertex is one of ``±p, p2, p3, -s p1, -s p2, -s p3``."""
    p = points["p"]
    cand = np.array([p, -p, points["p2"], points["p3"], -s * points["p1"], -s * points["p2"], -s * points["p3"]])
    scale = Kbar.scale
    for v in Kbar.vertices:
        if np.min(np.linalg.norm(cand - v, axis=1)) > tol * scale:
            return False
    return True
