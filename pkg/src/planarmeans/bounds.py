"""Scalar bound functions for the (s, tau) and (s, D/w) regions.

``c_of_s`` is the sharp upper bound for ``tau`` in terms of the asymmetry
``s``; the lower bound is ``2/(s+1)``. For pseudo-complete pairs the
diameter-width ratio lies in ``[1, (s+1) c(s) / 2]``.

The upper curve has two parametrizations. In terms of ``s`` it is the
piecewise ``c_of_s`` with breakpoints ``PHI`` and ``S_HAT``; in terms of
``tau`` it is ``s_max(tau) = s(tau, max(nu_star, nu_plus))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import OutOfDomain

PHI = (1.0 + math.sqrt(5.0)) / 2.0
DOMAIN_TOL = 1e-9
REGION_TOL = 1e-9


def _check(name: str, x: float, lo: float, hi: float) -> float:
    if not (lo - DOMAIN_TOL <= x <= hi + DOMAIN_TOL) or math.isnan(x):
        raise OutOfDomain(f"{name}={x!r} outside [{lo:.6g}, {hi:.6g}]")
    return min(max(x, lo), hi)


def _middle_branch(s: float) -> float:
    return (s * s + 1) ** 2 / ((s * s - 1) * (s * s + 2 * s - 1 + 2 * math.sqrt(s * (s * s - 1))))


def _upper_branch(s: float) -> float:
    return 2 * (s * s - 2 * s - 1) / ((s - 3) * (s + 1))


def _bisect(f, lo: float, hi: float, tol: float = 1e-15, iters: int = 200) -> float:
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


def nu_star(tau: float) -> float:
    """Smallest ``nu`` allowed by convexity at level ``tau``."""
    tau = _check("tau", tau, 2 / 3, 1.0)
    it = 1.0 / tau
    return math.sqrt(max((it - 1) * (2 * it - 1), 0.0))


def nu_plus(tau: float) -> float:
    """Maximizer of ``s(tau, .)`` on ``(0, 1]``."""
    tau = _check("tau", tau, 2 / 3, 1.0)
    it = 1.0 / tau
    return 1 - it + math.sqrt(max(it * (2 - it), 0.0))


def _branch_gap_slope(s: float, h: float = 1e-6) -> float:
    g = lambda x: _middle_branch(x) - _upper_branch(x)
    return (g(s + h) - g(s - h)) / (2 * h)


# The two branches touch tangentially (their gap is >= 0 with a double
# zero), so the breakpoint is located as the sign change of the gap slope.
S_HAT = _bisect(_branch_gap_slope, 1.7, 1.95)
TAU_HAT = _bisect(lambda t: nu_star(t) - nu_plus(t), 0.7, 0.9)


@dataclass(frozen=True)
class BoundConstants:
    phi: float = PHI
    s_hat: float = S_HAT
    tau_hat: float = TAU_HAT


CONSTANTS = BoundConstants()


def c_of_s(s: float) -> float:
    """Upper bound for ``tau`` at asymmetry ``s``.

    >>> c_of_s(1.0), round(c_of_s(2.0), 12)
    (1.0, 0.666666666667)
    """
    s = _check("s", s, 1.0, 2.0)
    if s <= PHI:
        return 1.0
    if s <= S_HAT:
        return _middle_branch(s)
    return _upper_branch(s)


def tau_lower(s: float) -> float:
    s = _check("s", s, 1.0, 2.0)
    return 2.0 / (s + 1.0)


def dw_envelope(s: float) -> float:
    """Largest diameter-width ratio of a pseudo-complete body with asymmetry ``s``."""
    s = _check("s", s, 1.0, 2.0)
    return 0.5 * (s + 1) * c_of_s(s)


def b_coefficient(tau: float, nu: float) -> float:
    it = 1.0 / tau
    return 4 * it * (it + nu - 1) / ((nu + 1) * (2 * it + nu - 1))


def s_of_tau_nu(tau: float, nu: float) -> float:
    """Larger root of ``s^2 - B(tau, nu) s - 1``."""
    tau = _check("tau", tau, 2 / 3, 1.0)
    if not (0.0 < nu <= 1.0 + DOMAIN_TOL):
        raise OutOfDomain(f"nu={nu!r} outside (0, 1]")
    nu = min(nu, 1.0)
    B = b_coefficient(tau, nu)
    return 0.5 * (B + math.sqrt(B * B + 4))


def nu_lower(tau: float) -> float:
    """``max(nu_star, nu_plus)``: start of the decreasing piece of ``s(tau, .)``."""
    return max(nu_star(tau), nu_plus(tau))


def s_max(tau: float) -> float:
    return s_of_tau_nu(tau, nu_lower(tau))


def tau_region_contains(s: float, tau: float, tol: float = REGION_TOL) -> bool:
    return tau_lower(s) - tol <= tau <= c_of_s(s) + tol


def dw_region_contains(s: float, rho: float, tol: float = REGION_TOL) -> bool:
    return 1.0 - tol <= rho <= dw_envelope(s) + tol
