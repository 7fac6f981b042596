"""Extremal bodies for the (s, tau) and (s, D/w) regions.

Every point of both regions is realized by an explicit polygon:

* ``k_s(s)``         ``S ∩ (-sS)`` for the regular triangle S; lower curve.
* ``f_transform``    a continuous deformation of ``k_s(s)`` that keeps s
                     and raises tau up to ``min(1, s/(s^2-1))``.
* ``heptagon``       the seven-point body parametrized by ``(tau, nu)``
                     filling the rest of the region up to ``c(s)``.
* ``c_lambda``       gauge bodies sweeping the D/w ratio for a fixed K.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bounds, geom
from . import functionals as fn
from .errors import InfeasibleParams, NotCentered, OutOfDomain, OutOfRegion
from .geom import ConvexPolygon

SQ3 = math.sqrt(3.0)
TRIANGLE = np.array([[0.0, 1.0], [SQ3 / 2, -0.5], [-SQ3 / 2, -0.5]])
BISECT_ITERS = 80
VERIFY_TOL = 1e-6


def golden_house() -> ConvexPolygon:
    phi = bounds.PHI
    return geom.make_polygon([(1, 0), (-1, 0), (1, -1), (-1, -1), (0, phi)])


def regular_triangle() -> ConvexPolygon:
    return geom.make_polygon(TRIANGLE)


def k_s(s: float) -> ConvexPolygon:
    """``S ∩ (-sS)``: hexagon at s = 1, the triangle S at s = 2."""
    s = bounds._check("s", s, 1.0, 2.0)
    P = TRIANGLE
    normals = np.vstack((-P, P))
    offsets = np.concatenate((np.full(3, 0.5), np.full(3, 0.5 * s)))
    return geom.from_halfplanes(normals, offsets)


def _unit(angle: float) -> np.ndarray:
    return np.array([math.cos(angle), math.sin(angle)])


def _outward_angle(a: np.ndarray, b: np.ndarray) -> float:
    """Angle of the normal of line ``ab`` pointing away from the origin."""
    e = b - a
    n = np.array([e[1], -e[0]])
    if n @ a < 0:
        n = -n
    return math.atan2(n[1], n[0])


def f_transform(s: float, t: float) -> ConvexPolygon:
    """Deform ``k_s(s)`` continuously in ``t`` keeping the asymmetry s.

    For ``t`` in ``[0, 1/2]`` the two lower slanted edges turn about the
    bottom corners ``q2, q3`` until they are vertical. For ``t`` in
    ``[1/2, 1]`` the two upper slanted edges turn about the asymmetry
    points ``-q2/s, -q3/s`` until they meet at ``(0, s/2)``. Rotation
    angles are linear in ``t`` on each half.
    """
    s = bounds._check("s", s, 1.0, 2.0)
    t = bounds._check("t", t, 0.0, 1.0)
    h = (2 * s - 1) / (2 * SQ3)
    q2, q3 = np.array([h, -0.5]), np.array([-h, -0.5])
    a2, a3 = -q2 / s, -q3 / s
    apex = np.array([0.0, 0.5 * s])

    u = min(t, 0.5) / 0.5
    v = max(t - 0.5, 0.0) / 0.5
    n_lo2 = _unit(math.radians(-30.0 + 30.0 * u))
    n_lo3 = _unit(math.radians(210.0 - 30.0 * u))
    # upper lines start on the edges of S with normals -p2 and -p3
    start2, start3 = math.radians(150.0), math.radians(30.0)
    end2, end3 = _outward_angle(a2, apex), _outward_angle(a3, apex)
    n_up2 = _unit(start2 + v * (end2 - start2))
    n_up3 = _unit(start3 + v * (end3 - start3))

    normals = np.array([[0.0, -1.0], [0.0, 1.0], n_lo2, n_lo3, n_up2, n_up3])
    offsets = np.array([0.5, 0.5 * s, n_lo2 @ q2, n_lo3 @ q3, n_up2 @ a2, n_up3 @ a3])
    return geom.from_halfplanes(normals, offsets)


@dataclass(frozen=True)
class HeptagonParams:
    tau: float
    nu: float
    s: float
    alphaParam: float
    gammaParam: float
    p: np.ndarray
    p1: np.ndarray
    p2: np.ndarray
    p3: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    d3: np.ndarray


def heptagon_params(tau: float, nu: float) -> HeptagonParams:
    tau = bounds._check("tau", tau, 2 / 3, 1.0)
    if not (0.0 < nu <= 1.0 + bounds.DOMAIN_TOL):
        raise OutOfDomain(f"nu={nu!r} outside (0, 1]")
    nu = min(nu, 1.0)
    it = 1.0 / tau
    s = bounds.s_of_tau_nu(tau, nu)
    a = (1 + nu) / (2 * it + nu - 1)
    den = s * a - 1
    if den <= 0:
        raise InfeasibleParams("s * alpha must exceed 1")
    if (2 * it + nu - 2) / nu > s + 1e-9:
        raise InfeasibleParams(f"nu={nu!r} below the convexity threshold {bounds.nu_star(tau)!r}")
    d1 = np.array([a * (nu - 1) / (nu + 1), -2 * s * a * nu / (den * (nu + 1))])
    inv_g = 2 * a / (nu + 1) ** 2 * (2 * nu / den - (nu - 1) ** 2 / 2)
    if inv_g <= 0:
        raise InfeasibleParams("degenerate gamma")
    g = 1.0 / inv_g
    if s * g > 1 + 1e-9:
        raise InfeasibleParams("-s p1 leaves the segment [0, d1]")
    return HeptagonParams(
        tau=tau,
        nu=nu,
        s=s,
        alphaParam=a,
        gammaParam=g,
        p=np.array([a, 0.0]),
        p1=-g * d1,
        p2=np.array([1 / s, -nu]),
        p3=np.array([-1 / s, -1.0]),
        d1=d1,
        d2=np.array([-1.0, s * (1 - a) / den]),
        d3=np.array([1.0, s * nu * (1 - a) / den]),
    )


def heptagon(tau: float, nu: float) -> tuple[ConvexPolygon, HeptagonParams]:
    """The body ``conv{±p, p2, p3, -s p1, -s p2, -s p3}`` with ``s = s(tau, nu)``.

    Accepts any ``nu`` in ``[nu_star(tau), 1]``; the body has asymmetry
    ``s(tau, nu)`` and ``tau`` as its mean-body factor.
    """
    P = heptagon_params(tau, nu)
    s = P.s
    pts = [P.p, -P.p, P.p2, P.p3, -s * P.p1, -s * P.p2, -s * P.p3]
    return geom.make_polygon(pts), P


def _bisect_root(f, lo: float, hi: float, iters: int = BISECT_ITERS) -> float:
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        # endpoints already within rounding of the target
        return lo if abs(flo) <= abs(fhi) else hi
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _tau_fast(K: ConvexPolygon) -> float:
    """tau of a body known to be centered at 0 (no centering check)."""
    return fn.symmetric_factor(fn.minimum_body(K), fn.arithmetic_mean(K))[0]


def _verify(K: ConvexPolygon, s: float, tau: float, tol: float) -> None:
    try:
        got_tau = fn.tau(K)
    except NotCentered as exc:
        raise OutOfRegion(f"generated body is not centered: {exc}") from None
    got_s = fn.asymmetry(K).s
    if abs(got_s - s) > tol or abs(got_tau - tau) > tol:
        raise OutOfRegion(f"verification failed: target (s={s}, tau={tau}), got (s={got_s}, tau={got_tau})")


def extremal_for(s: float, tau: float, *, verify: bool = True) -> ConvexPolygon:
    """A Minkowski-centered polygon with asymmetry ``s`` and factor ``tau``."""
    if not (1 - bounds.DOMAIN_TOL <= s <= 2 + bounds.DOMAIN_TOL):
        raise OutOfRegion(f"s={s!r} outside [1, 2]")
    s = min(max(s, 1.0), 2.0)
    if not bounds.tau_region_contains(s, tau):
        raise OutOfRegion(f"(s={s!r}, tau={tau!r}) outside the tau region")
    lower = bounds.tau_lower(s)
    tau = min(max(tau, lower), bounds.c_of_s(s))
    split = min(1.0, s / (s * s - 1)) if s > 1 else 1.0
    if tau <= split:
        t = _bisect_root(lambda t: _tau_fast(f_transform(s, t)) - tau, 0.0, 1.0)
        K = f_transform(s, t)
    else:
        lo = bounds.nu_lower(tau)
        nu = _bisect_root(lambda v: bounds.s_of_tau_nu(tau, v) - s, lo, 1.0)
        K = heptagon(tau, nu)[0]
    if verify:
        _verify(K, s, tau, VERIFY_TOL)
    return K


# ---------------------------------------------------------------------------
# gauge families for the diameter-width ratio


def c_lambda(K: ConvexPolygon, lam: float, s: float | None = None) -> ConvexPolygon:
    """``(1-lam) (K-K)/2 + lam (s+1)/2 (K ∩ -K)`` for centered K."""
    lam = bounds._check("lambda", lam, 0.0, 1.0)
    if s is None:
        s = fn.require_centered(K)
    A = fn.arithmetic_mean(K)
    M = geom.scale_translate(fn.minimum_body(K), 0.5 * (s + 1))
    if lam == 0.0:
        return A
    if lam == 1.0:
        return M
    return geom.minkowski_sum(geom.scale_translate(A, 1 - lam), geom.scale_translate(M, lam))


def dw_ratio_symmetric(K: ConvexPolygon, C: ConvexPolygon) -> float:
    """``D(K, C) / w(K, C)`` for 0-symmetric C without solving LPs.

    With ``A = (K-K)/2`` both operands are symmetric, so ``D = 2 max gauge_C``
    over the vertices of A and ``w = 2 / max gauge_A`` over the vertices of C.
    """
    A = fn.arithmetic_mean(K)
    D = 2 * float(geom.gauge_many(C, A.vertices).max())
    w = 2 / float(geom.gauge_many(A, C.vertices).max())
    return D / w


def dw_witness(s: float, rho: float, *, verify: bool = True) -> tuple[ConvexPolygon, ConvexPolygon]:
    """A pseudo-complete pair ``(K, C)`` with ``s(K) = s`` and ``D/w = rho``."""
    if not (1 - bounds.DOMAIN_TOL <= s <= 2 + bounds.DOMAIN_TOL):
        raise OutOfRegion(f"s={s!r} outside [1, 2]")
    s = min(max(s, 1.0), 2.0)
    if not bounds.dw_region_contains(s, rho):
        raise OutOfRegion(f"(s={s!r}, D/w={rho!r}) outside the D/w region")
    K = extremal_for(s, bounds.c_of_s(s), verify=verify)
    sK = fn.asymmetry(K).s
    lam = _bisect_root(lambda l: dw_ratio_symmetric(K, c_lambda(K, l, sK)) - rho, 0.0, 1.0)
    C = c_lambda(K, lam, sK)
    if verify:
        rep = fn.pseudo_complete_check(K, C)
        if not rep.is_pseudo_complete or abs(rep.ratio - rho) > 1e-5:
            raise OutOfRegion(f"witness check failed: pseudo-complete={rep.is_pseudo_complete}, D/w={rep.ratio}")
    return K, C
