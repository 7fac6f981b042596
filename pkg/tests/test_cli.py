import json

import pytest

from planarmeans import bounds, cli, geom
from planarmeans import functionals as fn

PHI = bounds.PHI


def _run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def poly(tmp_path):
    def write(name, pts):
        path = tmp_path / name
        geom.write_polygon(geom.make_polygon(pts), path)
        return path

    return write


def test_analyze_golden_house(capsys, poly):
    path = poly("gh.json", [(1, 0), (-1, 0), (1, -1), (-1, -1), (0, PHI)])
    code, out, _ = _run(capsys, "analyze", path)
    rep = json.loads(out)
    assert code == 0
    assert rep["s"] == pytest.approx(PHI, abs=1e-9)
    assert rep["tau"] == pytest.approx(1) and rep["alpha"] == pytest.approx(1)
    assert rep["dw"] == pytest.approx((PHI + 1) / 2, abs=1e-9)
    assert rep["pseudo_complete"] and rep["in_tau_region"] and rep["in_dw_region"]
    assert rep["certificate"]["optimal"] and rep["certificate"]["residual"] < 1e-8


def test_analyze_square_and_triangle(capsys, poly):
    _, out, _ = _run(capsys, "analyze", poly("sq.json", [(0, 0), (1, 0), (1, 1), (0, 1)]))
    rep = json.loads(out)
    assert rep["s"] == pytest.approx(1) and rep["tau"] == rep["alpha"] == pytest.approx(1)
    assert rep["gamma"] == pytest.approx(1)
    _, out, _ = _run(capsys, "analyze", poly("tri.json", [(0, 0), (4, 0), (1, 3)]))
    rep = json.loads(out)
    assert rep["s"] == pytest.approx(2) and rep["tau"] == pytest.approx(2 / 3)


def test_analyze_with_gauge(capsys, poly):
    K = poly("k.json", [(0, 0), (1, 0), (1, 1), (0, 1)])
    C = poly("c.json", [(-1, -1), (1, -1), (1, 1), (-1, 1)])
    _, out, _ = _run(capsys, "analyze", K, "--gauge", C)
    rep = json.loads(out)
    assert rep["gauge"] == "supplied" and rep["dw"] == pytest.approx(1)


def test_analyze_errors(capsys, tmp_path, poly):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert _run(capsys, "analyze", bad)[0] == 2
    assert _run(capsys, "analyze", tmp_path / "missing.json")[0] == 2
    flat = tmp_path / "flat.json"
    flat.write_text('{"vertices": [[0, 0], [1, 1], [2, 2]]}')
    code, _, err = _run(capsys, "analyze", flat)
    assert code == 2 and "DegenerateInput" in err


def test_generate_k_s_sidecar(capsys, tmp_path):
    out = tmp_path / "ks.json"
    assert _run(capsys, "generate", "k-s", "--s", 1.5, "--out", out)[0] == 0
    assert len(geom.read_polygon(out)) == 6
    meta = json.loads((tmp_path / "ks.meta.json").read_text())
    assert meta["tau"] == pytest.approx(0.8, abs=1e-9)
    assert meta["s"] == pytest.approx(1.5, abs=1e-9)


def test_generate_dw_witness_pair(capsys, tmp_path):
    out = tmp_path / "w.json"
    assert _run(capsys, "generate", "dw-witness", "--s", 1.618, "--rho", 1.309, "--out", out)[0] == 0
    K, C = geom.read_polygon(out), geom.read_polygon(tmp_path / "w.gauge.json")
    rep = fn.pseudo_complete_check(K, C)
    assert rep.is_pseudo_complete and rep.ratio == pytest.approx(1.309, abs=1e-6)


@pytest.mark.parametrize(
    "args",
    [
        ["golden-house"],
        ["heptagon", "--tau", 0.7, "--nu", 0.9],
        ["f-transform", "--s", 1.7, "--t", 0.3],
        ["extremal-for", "--s", 1.8, "--tau", 0.75],
        ["c-lambda", "--s", 1.7, "--lambda", 0.5],
    ],
)
def test_generate_families(capsys, tmp_path, args):
    out = tmp_path / "g.json"
    assert _run(capsys, "generate", *args, "--out", out)[0] == 0
    meta = json.loads((tmp_path / "g.meta.json").read_text())
    assert bounds.tau_region_contains(min(meta["s"], 2.0), meta["tau"], 1e-6)


@pytest.mark.parametrize(
    "args", [["heptagon", "--tau", 0.7], ["extremal-for", "--s", 1.9, "--tau", 0.95], ["heptagon", "--tau", 0.8, "--nu", 0.01]]
)
def test_generate_errors(capsys, tmp_path, args):
    code, _, err = _run(capsys, "generate", *args, "--out", tmp_path / "x.json")
    assert code == 2 and err.startswith("error:")


def test_region_command(capsys, tmp_path):
    out = tmp_path / "tau.csv"
    assert _run(capsys, "region", "tau", "--grid", 10, "--samples", 20, "--seed", 42, "--out", out)[0] == 0
    first = out.read_text()
    _run(capsys, "region", "tau", "--grid", 10, "--samples", 20, "--seed", 42, "--out", out)
    assert out.read_text() == first
    assert first.splitlines()[0] == "s,value,source,in_region"
    code, text, _ = _run(capsys, "region", "dw", "--grid", 5, "--samples", 3, "--format", "json")
    assert code == 0 and all(r["in_region"] for r in json.loads(text))


def test_region_usage(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["region", "tau", "--grid", "0"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        cli.main(["region", "nope"])
    assert err.value.code == 2


def test_verify_bounds_report(capsys):
    code, out, _ = _run(capsys, "verify", "bounds")
    rep = json.loads(out)
    assert code == 0 and rep["suite"] == "bounds"
    assert all(set(c) == {"name", "pass", "measured", "expected", "tol"} for c in rep["checks"])
    assert all(c["pass"] for c in rep["checks"])


def test_verify_reports_failures(capsys, monkeypatch):
    monkeypatch.setattr(bounds, "S_HAT", 1.9)
    code, out, _ = _run(capsys, "verify", "bounds")
    assert code == 1
    assert any(not c["pass"] for c in json.loads(out)["checks"])


def test_verify_all_suites_pass():
    from planarmeans import verify

    rep = verify.run_suite("all", seed=0, samples=50)
    failed = [c["name"] for c in rep["checks"] if not c["pass"]]
    assert failed == []
    assert len(rep["checks"]) > 100
