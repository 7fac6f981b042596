import numpy as np
import pytest

from planarmeans import bounds, canonical, extremal, geom
from planarmeans import functionals as fn
from planarmeans.errors import AsymmetryTooSmall
from planarmeans.sampling import HullMode, RandomPolygonSpec, random_polygon

PHI = bounds.PHI


def _bodies():
    yield "triangle", extremal.regular_triangle()
    yield "k_s(1.9)", extremal.k_s(1.9)
    yield "f(1.8, 0.5)", extremal.f_transform(1.8, 0.5)
    yield "f(1.95, 1)", extremal.f_transform(1.95, 1.0)
    yield "heptagon(0.8, 0.7)", extremal.heptagon(0.8, 0.7)[0]
    for s, tau in [(1.7, 0.75), (1.8, 0.8), (1.9, 0.72), (1.99, 0.671)]:
        yield f"extremal({s}, {tau})", extremal.extremal_for(s, tau)
    count = 0
    for seed in range(400):
        K = fn.centered(random_polygon(RandomPolygonSpec(seed, 3 + seed % 6, HullMode(("unit-circle", "gaussian")[seed % 2]))))
        if fn.asymmetry(K).s > PHI + 0.05:
            yield f"random({seed})", K
            count += 1
        if count == 12:
            break


BODIES = list(_bodies())


@pytest.mark.parametrize("name,K", BODIES, ids=[b[0] for b in BODIES])
def test_trace_invariants(name, K):
    Kbar, trace = canonical.canonicalize(K)
    s = np.array(trace.s_values)
    t = np.array(trace.tau_values)
    assert [st.name for st in trace.steps] == ["input", "minimum+tips", "step1", "step2", "step3", "step4"]
    assert np.abs(s - s[0]).max() <= 1e-7
    assert np.all(np.diff(t) >= -1e-9)
    assert canonical.has_normal_form(Kbar, trace.points, s[0])
    assert len(Kbar) <= 7
    # the normal form still lies in the region
    assert bounds.tau_region_contains(min(s[-1], 2.0), t[-1], 1e-7)


def test_final_body_matches_heptagon_shape():
    K = extremal.extremal_for(1.8, 0.8)
    Kbar, trace = canonical.canonicalize(K)
    p = trace.points
    s = trace.s_values[0]
    pts = [p["p"], -p["p"], p["p2"], p["p3"], -s * p["p1"], -s * p["p2"], -s * p["p3"]]
    assert geom.same_polygon(Kbar, geom.make_polygon(pts), 1e-9)
    # d1 is the meeting point of the lines through -p, p3 and p, p2
    d1 = p["d1"]
    for a, b in ((-p["p"], p["p3"]), (p["p"], p["p2"])):
        e = b - a
        assert abs(e[0] * (d1 - a)[1] - e[1] * (d1 - a)[0]) < 1e-9


def test_crossing_labels_cover_six_crossings():
    K = extremal.heptagon(0.8, 0.7)[0]
    P = np.array(fn.asymmetry(K).asym_points)
    Z = canonical.label_crossings(geom.transversal_crossings(K), P)
    assert len(Z) == 6
    assert all(i != j for i, j in Z)


@pytest.mark.parametrize("K", [extremal.golden_house(), extremal.k_s(1.5)])
def test_rejects_small_asymmetry(K):
    with pytest.raises(AsymmetryTooSmall):
        canonical.canonicalize(K)
