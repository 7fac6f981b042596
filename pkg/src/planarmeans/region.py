"""Data sweeps over the (s, tau) and (s, D/w) regions.

Rows come from three sources: the boundary curves on an s-grid, the
extremal generators, and random polygons. Every row is checked against
the region predicates; a violation aborts the sweep after dumping the
offending bodies to JSON.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import bounds, extremal, geom
from . import functionals as fn
from .geom import ConvexPolygon
from .sampling import HullMode, RandomPolygonSpec, random_polygon

DEFAULT_TOL = 1e-6
HEADER = ("s", "value", "source", "in_region")


@dataclass(frozen=True)
class RegionSample:
    s: float
    value: float
    source: str
    in_region: bool

    def row(self) -> tuple[str, str, str, str]:
        return (f"{self.s:.15g}", f"{self.value:.15g}", self.source, "true" if self.in_region else "false")


class RegionViolation(RuntimeError):
    def __init__(self, sample: RegionSample, dump: Path | None):
        super().__init__(f"{sample.source}: (s={sample.s}, value={sample.value}) outside the region; dump at {dump}")
        self.sample = sample
        self.dump = dump


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def s_grid(n: int) -> list[float]:
    """``n`` evenly spaced values on [1, 2] plus the breakpoints phi and s_hat."""
    if n < 1:
        raise ValueError("grid size must be at least 1")
    pts = set(np.linspace(1.0, 2.0, max(n, 2)).tolist())
    pts.update((bounds.PHI, bounds.S_HAT))
    return sorted(pts)


def spec_for(seed: int, index: int) -> RandomPolygonSpec:
    """Sample ``index`` of a sweep seeded by ``seed``: 3 to 10 vertices, modes alternate."""
    sub = int(np.random.SeedSequence([seed, index]).generate_state(1, dtype=np.uint64)[0])
    mode = HullMode.GAUSSIAN if index % 2 else HullMode.UNIT_CIRCLE
    return RandomPolygonSpec(sub, 3 + index % 8, mode)


# -- tau region -------------------------------------------------------------------


def tau_boundary(grid: int) -> list[RegionSample]:
    rows = []
    for s in s_grid(grid):
        rows.append(RegionSample(s, bounds.tau_lower(s), "Boundary(lower)", True))
        rows.append(RegionSample(s, bounds.c_of_s(s), "Boundary(upper)", True))
    return rows


def _tau_row(K: ConvexPolygon, source: str, tol: float) -> tuple[RegionSample, ConvexPolygon]:
    s, t, Kc = fn.measure(K)
    s_eval = min(max(s, 1.0), 2.0)
    return RegionSample(s, t, source, bounds.tau_region_contains(s_eval, t, tol)), Kc


def tau_generators(grid: int, tol: float) -> list[tuple[RegionSample, ConvexPolygon]]:
    out = []
    k = max(2, min(grid, 11))
    for s in np.linspace(1.0, 2.0, k):
        out.append(_tau_row(extremal.k_s(s), f"KsFamily({_fmt(s)})", tol))
    for s in np.linspace(1.2, 2.0, max(2, k // 2)):
        for t in np.linspace(0.0, 1.0, 5):
            out.append(_tau_row(extremal.f_transform(s, t), f"FTransform({_fmt(s)},{_fmt(t)})", tol))
    for tau in np.linspace(2 / 3, 1.0, max(2, k // 2)):
        lo = max(bounds.nu_star(tau), 1e-3)
        for nu in np.linspace(lo, 1.0, 4):
            K, _ = extremal.heptagon(tau, nu)
            out.append(_tau_row(K, f"Heptagon({_fmt(tau)},{_fmt(nu)})", tol))
    return out


def _random_tau(args) -> tuple[RegionSample, ConvexPolygon]:
    seed, index, tol = args
    spec = spec_for(seed, index)
    return _tau_row(random_polygon(spec), f"RandomPolygon({spec.seed})", tol)


# -- D/w region ---------------------------------------------------------------------


def dw_boundary(grid: int) -> list[RegionSample]:
    rows = []
    for s in s_grid(grid):
        rows.append(RegionSample(s, 1.0, "Boundary(lower)", True))
        if s <= bounds.PHI:
            rows.append(RegionSample(s, 0.5 * (s + 1), "Boundary(linear)", True))
        rows.append(RegionSample(s, bounds.dw_envelope(s), "Boundary(upper)", True))
    return rows


def _dw_row(K: ConvexPolygon, C: ConvexPolygon, source: str, tol: float) -> tuple[RegionSample, list]:
    s = fn.asymmetry(K).s
    ratio = fn.diameter(K, C) / fn.width(K, C)
    ok = bounds.dw_region_contains(min(max(s, 1.0), 2.0), ratio, tol)
    return RegionSample(s, ratio, source, ok), [K, C]


def dw_generators(grid: int, tol: float) -> list[tuple[RegionSample, list]]:
    out = []
    k = max(2, min(grid, 7))
    for s in np.linspace(1.0, 2.0, k):
        K = extremal.extremal_for(s, bounds.c_of_s(s))
        sK = fn.asymmetry(K).s
        for lam in np.linspace(0.0, 1.0, 5):
            C = extremal.c_lambda(K, lam, sK)
            out.append(_dw_row(K, C, f"CLambda({_fmt(s)},{_fmt(lam)})", tol))
    return out


def _random_dw(args) -> tuple[RegionSample, list]:
    seed, index, tol = args
    spec = spec_for(seed, index)
    Kc = fn.centered(random_polygon(spec))
    lam = float(np.random.default_rng(spec.seed).uniform())
    C = extremal.c_lambda(Kc, lam)
    return _dw_row(Kc, C, f"RandomPolygon({spec.seed})", tol)


# -- driver ---------------------------------------------------------------------------


def _map(func, items, workers: int):
    if workers <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(func, items, chunksize=64))


def _dump(bodies, sample: RegionSample, dump_dir: Path | None) -> Path | None:
    if dump_dir is None:
        return None
    dump_dir.mkdir(parents=True, exist_ok=True)
    safe = "".join(ch if ch.isalnum() else "_" for ch in sample.source)
    path = dump_dir / f"violation_{safe}.json"
    if isinstance(bodies, ConvexPolygon):
        bodies = [bodies]
    payload = {
        "sample": {"s": sample.s, "value": sample.value, "source": sample.source},
        "bodies": [geom.polygon_to_dict(b) for b in bodies],
    }
    path.write_text(json.dumps(payload, indent=2))
    return path


def sweep(
    which: str,
    grid: int = 50,
    samples: int = 200,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    workers: int = 1,
    dump_dir: Path | None = Path("."),
) -> list[RegionSample]:
    """All rows for ``which`` in {"tau", "dw"}, in a deterministic order."""
    if which == "tau":
        boundary, gens, rand = tau_boundary(grid), tau_generators(grid, tol), _random_tau
    elif which == "dw":
        boundary, gens, rand = dw_boundary(grid), dw_generators(grid, tol), _random_dw
    else:
        raise ValueError(f"unknown region {which!r}")
    if samples < 0:
        raise ValueError("samples must be non-negative")
    scattered = _map(rand, [(seed, i, tol) for i in range(samples)], workers)
    rows = list(boundary)
    for sample, bodies in list(gens) + scattered:
        if not sample.in_region:
            raise RegionViolation(sample, _dump(bodies, sample, dump_dir))
        rows.append(sample)
    return rows


def to_csv(rows: list[RegionSample]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in rows:
        w.writerow(r.row())
    return buf.getvalue()


def to_json(rows: list[RegionSample]) -> str:
    data = [{"s": r.s, "value": r.value, "source": r.source, "in_region": r.in_region} for r in rows]
    return json.dumps(data, indent=1)


def max_violation(rows: list[RegionSample], which: str) -> float:
    """Largest distance outside the region over ``rows`` (0 when all inside)."""
    worst = 0.0
    for r in rows:
        s = min(max(r.s, 1.0), 2.0)
        if which == "tau":
            lo, hi = bounds.tau_lower(s), bounds.c_of_s(s)
        else:
            lo, hi = 1.0, bounds.dw_envelope(s)
        worst = max(worst, lo - r.value, r.value - hi)
    return worst if math.isfinite(worst) else math.inf
