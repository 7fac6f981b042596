"""Named verification suites producing machine-readable reports."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import bounds, canonical, extremal, geom, region
from . import functionals as fn
from .errors import GeometryError

SUITES = ("functionals", "bounds", "generators", "pipeline", "regions")


@dataclass
class Check:
    name: str
    passed: bool
    measured: float | None
    expected: float | None
    tol: float | None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        for k in ("measured", "expected", "tol"):
            if isinstance(d[k], float) and not math.isfinite(d[k]):
                d[k] = str(d[k])
        return d


class _Collector:
    def __init__(self):
        self.checks: list[Check] = []

    def close(self, name, measured, expected, tol):
        measured, expected = float(measured), float(expected)
        self.checks.append(Check(name, abs(measured - expected) <= tol, measured, expected, tol))

    def at_most(self, name, measured, bound, tol=0.0):
        measured = float(measured)
        self.checks.append(Check(name, measured <= bound + tol, measured, float(bound), tol))

    def truth(self, name, ok):
        self.checks.append(Check(name, bool(ok), float(bool(ok)), 1.0, 0.0))

    def guarded(self, name, func):
        try:
            func()
        except GeometryError as exc:
            self.checks.append(Check(f"{name}: {type(exc).__name__}: {exc}", False, None, None, None))


def _functionals(c: _Collector, seed: int, samples: int) -> None:
    phi = bounds.PHI
    GH = extremal.golden_house()
    c.close("golden house s", fn.asymmetry(GH).s, phi, 1e-8)
    c.close("golden house tau", fn.tau(GH), 1.0, 1e-8)
    c.close("golden house alpha", fn.alpha(GH), 1.0, 1e-8)
    M = fn.minimum_body(GH)
    rep = fn.pseudo_complete_check(GH, M)
    c.close("golden house D/w", rep.ratio, (phi + 1) / 2, 1e-7)
    c.truth("golden house pseudo-complete", rep.is_pseudo_complete and rep.sandwich)
    T = fn.centered(geom.make_polygon([(0, 0), (3, 0), (0, 3)]))
    c.close("triangle s", fn.asymmetry(T).s, 2.0, 1e-9)
    c.close("triangle tau", fn.tau(T), 2 / 3, 1e-9)
    c.close("triangle gamma", fn.gamma(T), 2 / 3, 1e-9)
    worst = 0.0
    for i in range(min(samples, 100)):
        K = fn.centered(region.random_polygon(region.spec_for(seed, i)))
        worst = max(worst, abs(fn.gamma(K) - fn.gamma_direct(K)))
    c.at_most("gamma duality gap", worst, 1e-6)


def _bounds(c: _Collector) -> None:
    from .bounds import _middle_branch, _upper_branch

    c.truth("s_hat in [1.8535, 1.8537]", 1.8535 <= bounds.S_HAT <= 1.8537)
    c.close("branch mismatch at s_hat", _middle_branch(bounds.S_HAT), _upper_branch(bounds.S_HAT), 1e-10)
    c.truth("tau_hat in [0.775, 0.785]", 0.775 <= bounds.TAU_HAT <= 0.785)
    c.close("nu_star = nu_plus at tau_hat", bounds.nu_star(bounds.TAU_HAT), bounds.nu_plus(bounds.TAU_HAT), 1e-10)
    c.close("s_hat = s(tau_hat, nu_plus)", bounds.s_max(bounds.TAU_HAT), bounds.S_HAT, 1e-9)
    c.close("c continuous at phi", _middle_branch(bounds.PHI), 1.0, 1e-10)
    c.close("s_max(1)", bounds.s_max(1.0), bounds.PHI, 1e-12)
    c.close("s_max(2/3)", bounds.s_max(2 / 3), 2.0, 1e-12)
    grid = np.arange(1.0, 2.0 + 1e-12, 1e-4)
    env = np.array([bounds.dw_envelope(s) for s in grid])
    k = int(np.searchsorted(grid, bounds.PHI))
    c.truth("envelope rises then falls", np.all(np.diff(env[:k]) >= -1e-12) and np.all(np.diff(env[k:]) <= 1e-12))
    c.close("envelope peak", bounds.dw_envelope(bounds.PHI), (bounds.PHI + 1) / 2, 1e-7)
    c.at_most("envelope maximum", env.max(), (bounds.PHI + 1) / 2, 1e-12)
    worst = max(abs(bounds.c_of_s(bounds.s_max(bounds.c_of_s(s))) - bounds.c_of_s(s)) for s in np.linspace(1.62, 2, 200))
    c.at_most("inverse consistency", worst, 1e-7)


def _generators(c: _Collector, seed: int, samples: int) -> None:
    for s in np.round(np.arange(1.0, 2.01, 0.1), 10):
        K = extremal.k_s(s)
        c.close(f"k_s({s:g}) s", fn.asymmetry(K).s, s, 1e-7)
        c.close(f"k_s({s:g}) tau", fn.tau(K), 2 / (s + 1), 1e-7)
        c.close(f"k_s({s:g}) alpha", fn.alpha(K), 2 / (s + 1), 1e-7)
    for s in (1.2, 1.5, 1.7, 1.9, 2.0):
        c.close(f"f({s}, 1) tau", fn.tau(extremal.f_transform(s, 1.0)), min(1.0, s / (s * s - 1)), 1e-6)
        for t in (0.0, 0.25, 0.5, 0.75, 1.0):
            c.close(f"f({s}, {t}) s", fn.asymmetry(extremal.f_transform(s, t)).s, s, 1e-6)
    worst = 0.0
    for tau in np.linspace(2 / 3, 1.0, 10):
        for nu in np.linspace(max(bounds.nu_star(tau), 1e-3), 1.0, 10):
            K, P = extremal.heptagon(tau, nu)
            worst = max(worst, abs(fn.tau(K) - tau), abs(fn.asymmetry(K).s - P.s))
    c.at_most("heptagon round-trip", worst, 1e-6)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(min(samples, 50)):
        s = rng.uniform(1.0, 2.0)
        tau = rng.uniform(bounds.tau_lower(s), bounds.c_of_s(s))
        K = extremal.extremal_for(s, tau)
        s_got, t_got, _ = fn.measure(K)
        worst = max(worst, abs(s_got - s), abs(t_got - tau))
    c.at_most("extremal_for targets", worst, 1e-5)


def _pipeline(c: _Collector, seed: int, samples: int) -> None:
    rng = np.random.default_rng(seed)
    n = min(samples, 50)
    for k in range(n):
        s = rng.uniform(bounds.PHI + 0.05, 2.0)
        tau = rng.uniform(bounds.tau_lower(s), bounds.c_of_s(s))
        K = extremal.extremal_for(s, tau)

        def run(K=K, k=k):
            Kbar, trace = canonical.canonicalize(K)
            sv, tv = np.array(trace.s_values), np.array(trace.tau_values)
            c.at_most(f"body {k}: s drift", np.abs(sv - sv[0]).max(), 1e-7)
            c.at_most(f"body {k}: tau drop", max(0.0, float(-np.diff(tv).min())), 1e-9)
            c.truth(f"body {k}: normal form", canonical.has_normal_form(Kbar, trace.points, sv[0]))
            c.close(f"body {k}: crossings", len(geom.transversal_crossings(K)), 6, 0)

        c.guarded(f"body {k}", run)


def _regions(c: _Collector, seed: int, samples: int) -> None:
    rows = region.sweep("tau", grid=20, samples=samples, seed=seed, dump_dir=None)
    c.at_most("tau region violation", region.max_violation(rows, "tau"), 0.0, 1e-6)
    rows = region.sweep("dw", grid=10, samples=max(1, samples // 10), seed=seed, dump_dir=None)
    c.at_most("dw region violation", region.max_violation(rows, "dw"), 0.0, 1e-6)


def run_suite(name: str, seed: int = 0, samples: int = 200) -> dict:
    """Run ``name`` (one of SUITES or "all"); returns ``{suite, checks}``."""
    names = SUITES if name == "all" else (name,)
    if any(n not in SUITES for n in names):
        raise ValueError(f"unknown suite {name!r}")
    c = _Collector()
    for n in names:
        if n == "functionals":
            c.guarded(n, lambda: _functionals(c, seed, samples))
        elif n == "bounds":
            c.guarded(n, lambda: _bounds(c))
        elif n == "generators":
            c.guarded(n, lambda: _generators(c, seed, samples))
        elif n == "pipeline":
            _pipeline(c, seed, samples)
        elif n == "regions":
            try:
                _regions(c, seed, samples)
            except region.RegionViolation as exc:
                c.checks.append(Check(f"region sweep: {exc}", False, None, None, None))
    return {"suite": name, "checks": [ch.to_dict() for ch in c.checks]}


def passed(report: dict) -> bool:
    return all(ch["pass"] for ch in report["checks"])
