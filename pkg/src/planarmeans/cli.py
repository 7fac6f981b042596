"""Command-line entry point: ``planarmeans {analyze,generate,region,verify}``.

Exit codes: 0 success, 1 a violated check or region bound, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import bounds, extremal, geom, region, verify
from . import functionals as fn
from .errors import GeometryError, OutOfDomain

FAMILIES = ("golden-house", "k-s", "f-transform", "heptagon", "extremal-for", "c-lambda", "dw-witness")


def _vec(x) -> list[float]:
    return [float(v) for v in np.asarray(x).reshape(-1)]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def analyze_body(K: geom.ConvexPolygon, C: geom.ConvexPolygon | None = None, tol: float = 1e-6) -> dict:
    """Invariants of K; the D/w ratio uses C or, by default, the minimum of K."""
    a = fn.asymmetry(K)
    Kc = geom.translate(K, -a.center)
    s = a.s
    tau, alpha = fn.tau(Kc), fn.alpha(Kc)
    gamma = fn.gamma(Kc)
    gauge = C if C is not None else fn.minimum_body(Kc)
    rep = fn.pseudo_complete_check(Kc, gauge, tol=1e-7)
    inner = geom.scale_translate(Kc, -1.0 / s)
    cert = fn.optimal_containment_check(inner, Kc) if Kc.contains_polygon(inner, 1e-9) else None
    s_eval = min(max(s, 1.0), 2.0)
    return {
        "s": s,
        "center": _vec(a.center),
        "tau": tau,
        "alpha": alpha,
        "gamma": gamma,
        "gauge": "supplied" if C is not None else "minimum",
        "D": rep.D,
        "w": rep.w,
        "dw": rep.ratio,
        "pseudo_complete": rep.is_pseudo_complete,
        "in_tau_region": bounds.tau_region_contains(s_eval, tau, tol),
        "in_dw_region": bounds.dw_region_contains(s_eval, rep.ratio, tol) if rep.is_pseudo_complete else None,
        "certificate": None
        if cert is None
        else {
            "optimal": cert.optimal,
            "rho": cert.rho,
            "residual": cert.residual,
            "touching": [{"point": _vec(t.point), "normal": _vec(t.normal), "weight": t.weight} for t in cert.touching],
        },
        "asymmetry_points": [_vec(p) for p in a.asym_points],
    }


def _cmd_analyze(args) -> int:
    K = geom.read_polygon(args.input)
    C = geom.read_polygon(args.gauge) if args.gauge else None
    report = analyze_body(K, C, args.tol)
    _emit(json.dumps(report, indent=2), args.out)
    return 0


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise OutOfDomain(f"family {args.family!r} needs --{' --'.join(missing)}")


def _generate(args) -> tuple[geom.ConvexPolygon, geom.ConvexPolygon | None]:
    fam = args.family
    if fam == "golden-house":
        return extremal.golden_house(), None
    if fam == "k-s":
        _need(args, "s")
        return extremal.k_s(args.s), None
    if fam == "f-transform":
        _need(args, "s", "t")
        return extremal.f_transform(args.s, args.t), None
    if fam == "heptagon":
        _need(args, "tau", "nu")
        return extremal.heptagon(args.tau, args.nu)[0], None
    if fam == "extremal-for":
        _need(args, "s", "tau")
        return extremal.extremal_for(args.s, args.tau), None
    if fam == "c-lambda":
        _need(args, "s", "lam")
        K = extremal.extremal_for(args.s, bounds.c_of_s(args.s))
        return K, extremal.c_lambda(K, args.lam)
    if fam == "dw-witness":
        _need(args, "s", "rho")
        return extremal.dw_witness(args.s, args.rho)
    raise OutOfDomain(f"unknown family {fam!r}")


def _cmd_generate(args) -> int:
    K, C = _generate(args)
    out = Path(args.out)
    stem = out.with_suffix("") if out.suffix == ".json" else out
    geom.write_polygon(K, out)
    s, tau, Kc = fn.measure(K)
    gauge = C if C is not None else fn.minimum_body(Kc)
    meta = {"family": args.family, "s": s, "tau": tau, "dw": fn.diameter(Kc, gauge) / fn.width(Kc, gauge)}
    if C is not None:
        gpath = Path(f"{stem}.gauge.json")
        geom.write_polygon(C, gpath)
        meta["gauge_file"] = gpath.name
        meta["pseudo_complete"] = fn.pseudo_complete_check(K, C).is_pseudo_complete
    Path(f"{stem}.meta.json").write_text(json.dumps(meta, indent=2))
    print(json.dumps(meta))
    return 0


def _cmd_region(args) -> int:
    dump = Path(args.out).parent if args.out else Path(".")
    try:
        rows = region.sweep(args.which, args.grid, args.samples, args.seed, args.tol, args.workers, dump)
    except region.RegionViolation as exc:
        print(f"region violation: {exc}", file=sys.stderr)
        return 1
    text = region.to_csv(rows) if args.format == "csv" else region.to_json(rows)
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    report = verify.run_suite(args.suite, seed=args.seed, samples=args.samples)
    _emit(json.dumps(report, indent=2), args.out)
    return 0 if verify.passed(report) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planarmeans", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="invariants of a polygon file")
    a.add_argument("input")
    a.add_argument("--gauge", help="polygon file of a 0-symmetric gauge body")
    a.add_argument("--tol", type=float, default=1e-6)
    a.add_argument("--format", choices=("json",), default="json")
    a.add_argument("--out")
    a.set_defaults(func=_cmd_analyze)

    g = sub.add_parser("generate", help="write a member of an extremal family")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("--s", type=float)
    g.add_argument("--t", type=float)
    g.add_argument("--tau", type=float)
    g.add_argument("--nu", type=float)
    g.add_argument("--lambda", dest="lam", type=float)
    g.add_argument("--rho", type=float)
    g.add_argument("--out", required=True)
    g.set_defaults(func=_cmd_generate)

    r = sub.add_parser("region", help="sweep a region to CSV")
    r.add_argument("which", choices=("tau", "dw"))
    r.add_argument("--grid", type=int, default=100)
    r.add_argument("--samples", type=int, default=1000)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--tol", type=float, default=region.DEFAULT_TOL)
    r.add_argument("--workers", type=int, default=1)
    r.add_argument("--format", choices=("csv", "json"), default="csv")
    r.add_argument("--out")
    r.set_defaults(func=_cmd_region)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=verify.SUITES + ("all",))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--format", choices=("json",), default="json")
    v.add_argument("--out")
    v.set_defaults(func=_cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "grid", 1) < 1 or getattr(args, "samples", 0) < 0:
        parser.error("--grid must be >= 1 and --samples >= 0")
    try:
        return args.func(args)
    except (GeometryError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
