import math

import numpy as np
import pytest
from conftest import polygons
from hypothesis import given, settings

import oracles
from planarmeans import extremal, geom
from planarmeans import functionals as fn
from planarmeans.errors import GaugeNotSymmetric, NotCentered, NotContained

PHI = (1 + 5**0.5) / 2
SQUARE = geom.make_polygon([(-1, -1), (1, -1), (1, 1), (-1, 1)])
TRIANGLE = geom.make_polygon([(0, 0), (3, 0), (0, 3)])


def test_square_invariants():
    assert fn.asymmetry(SQUARE).s == pytest.approx(1.0, abs=1e-12)
    assert fn.tau(SQUARE) == pytest.approx(1.0)
    assert fn.alpha(SQUARE) == pytest.approx(1.0)
    assert fn.gamma(SQUARE) == pytest.approx(1.0)


def test_triangle_invariants():
    a = fn.asymmetry(TRIANGLE)
    assert a.s == pytest.approx(2.0, abs=1e-12)
    assert np.allclose(a.center, TRIANGLE.centroid)
    assert a.well_spread
    T = fn.centered(TRIANGLE)
    for f in (fn.tau, fn.alpha, fn.gamma):
        assert f(T) == pytest.approx(2 / 3, abs=1e-12)


def test_golden_house():
    GH = extremal.golden_house()
    assert fn.asymmetry(GH).s == pytest.approx(PHI, abs=1e-12)
    assert np.allclose(fn.minkowski_center(GH), 0, atol=1e-12)
    assert fn.tau(GH) == pytest.approx(1.0, abs=1e-12)
    assert fn.alpha(GH) == pytest.approx(1.0, abs=1e-12)
    # regression baseline: the harmonic mean factor of the golden house
    assert fn.gamma(GH) == pytest.approx(1.0, abs=1e-9)


def test_circumradius_of_square_in_disk_polygon():
    C = geom.make_polygon([(math.cos(t), math.sin(t)) for t in np.linspace(0, 2 * np.pi, 9)[:-1] + np.pi / 8])
    res = fn.circumradius(SQUARE, C)
    ref, _ = oracles.circumradius(SQUARE.vertices, C.vertices)
    assert res.rho == pytest.approx(ref, abs=1e-9)
    assert res.certificate_residual() < 1e-8


@settings(max_examples=30, deadline=None)
@given(polygons(), polygons(min_vertices=4))
def test_circumradius_and_inradius_against_brute_force(K, C):
    C = geom.translate(C, -C.centroid)
    R = fn.circumradius(K, C)
    assert R.rho == pytest.approx(oracles.circumradius_lp(K.vertices, C.vertices), rel=1e-8)
    assert R.rho <= oracles.circumradius(K.vertices, C.vertices)[0] * (1 + 1e-9)
    assert R.certificate_residual() < 1e-8
    assert geom.scale_translate(C, R.rho * (1 + 1e-9), R.translation).contains_polygon(K, 1e-9)
    r = fn.inradius(K, C)
    assert r.rho == pytest.approx(oracles.inradius_lp(K.vertices, C.vertices), rel=1e-8)
    assert r.rho >= oracles.inradius(K.vertices, C.vertices)[0] * (1 - 1e-9)
    assert K.contains_polygon(geom.scale_translate(C, r.rho, r.translation), 1e-8)


@settings(max_examples=25, deadline=None)
@given(polygons())
def test_asymmetry_against_brute_force(K):
    a = fn.asymmetry(K)
    assert a.s == pytest.approx(oracles.asymmetry_lp(K.vertices), rel=1e-8)
    assert a.s <= oracles.asymmetry(K.vertices)[0] * (1 + 1e-9)
    assert 1 - 1e-9 <= a.s <= 2 + 1e-9
    Kc = geom.translate(K, -a.center)
    assert fn.centering_gap(Kc) <= 1e-7
    # every asymmetry point lies on bd K and bd(-K/s)
    for p in a.asym_points:
        assert geom.gauge(Kc, p) == pytest.approx(1, abs=1e-7)
        assert geom.gauge(Kc, -a.s * p) == pytest.approx(1, abs=1e-7)


@settings(max_examples=25, deadline=None)
@given(polygons())
def test_tau_against_shapely(K):
    Kc = fn.centered(K)
    assert fn.tau(Kc) == pytest.approx(oracles.tau(Kc.vertices), rel=1e-8)


@settings(max_examples=25, deadline=None)
@given(polygons())
def test_invariant_under_linear_maps(K):
    Kc = fn.centered(K)
    M = np.array([[1.3, 0.4], [-0.2, 0.7]])
    L = geom.linear_map(Kc, M)
    assert fn.asymmetry(L).s == pytest.approx(fn.asymmetry(Kc).s, rel=1e-7)
    assert fn.tau(L) == pytest.approx(fn.tau(Kc), rel=1e-7)
    assert fn.alpha(L) == pytest.approx(fn.alpha(Kc), rel=1e-7)


@settings(max_examples=25, deadline=None)
@given(polygons())
def test_gamma_matches_direct_route(K):
    Kc = fn.centered(K)
    assert fn.gamma(Kc) == pytest.approx(fn.gamma_direct(Kc), abs=1e-6)


@settings(max_examples=25, deadline=None)
@given(polygons())
def test_mean_body_chain(K):
    # K ∩ -K ⊂ (K-K)/2 ⊂ conv(K ∪ -K), and the harmonic mean sits between
    Kc = fn.centered(K)
    M, A, X, H = fn.minimum_body(Kc), fn.arithmetic_mean(Kc), fn.maximum_body(Kc), fn.harmonic_mean(Kc)
    assert A.contains_polygon(M, 1e-9) and X.contains_polygon(A, 1e-9)
    assert H.contains_polygon(M, 1e-9) and A.contains_polygon(H, 1e-9)
    s = fn.asymmetry(Kc).s
    assert 2 / (s + 1) - 1e-9 <= fn.tau(Kc) <= 1 + 1e-9


def test_rho_of_direction():
    K = fn.centered(TRIANGLE)
    t, z = fn.tau_witness(K)
    assert fn.rho_of_direction(K, z) == pytest.approx(1 / t)
    for v in np.random.default_rng(3).normal(size=(50, 2)):
        assert 1 / t - 1e-12 <= fn.rho_of_direction(K, v) <= 1.5 + 1e-7
    # vertices of K ∩ -K on the asymmetry rays of the triangle give (s+1)/2
    for p in fn.asymmetry(K).asym_points:
        assert fn.rho_of_direction(K, p) == pytest.approx(1.5)
    assert fn.rho_of_direction(SQUARE, (0.3, 1.0)) == pytest.approx(1.0)
    assert fn.rho_of_direction(extremal.golden_house(), (1, 0)) == pytest.approx(1.0)


def test_not_centered():
    with pytest.raises(NotCentered):
        fn.tau(geom.translate(TRIANGLE, (0.3, 0.1)))
    with pytest.raises(NotCentered):
        fn.require_centered(TRIANGLE)


def test_diameter_width_euclidean_square():
    disk = geom.make_polygon([(math.cos(t), math.sin(t)) for t in np.linspace(0, 2 * np.pi, 4097)[:-1]])
    assert fn.diameter(SQUARE, disk) == pytest.approx(2 * math.sqrt(2), rel=1e-5)
    assert fn.width(SQUARE, disk) == pytest.approx(2.0, rel=1e-5)


def test_optimal_containment():
    T = fn.centered(TRIANGLE)
    cert = fn.optimal_containment_check(geom.scale_translate(T, -0.5), T)
    assert cert.optimal and cert.residual < 1e-8
    assert not fn.optimal_containment_check(geom.scale_translate(SQUARE, 0.5), SQUARE).optimal
    with pytest.raises(NotContained):
        fn.optimal_containment_check(geom.scale_translate(SQUARE, 2), SQUARE)


def test_pseudo_complete_golden_house():
    GH = extremal.golden_house()
    rep = fn.pseudo_complete_check(GH, fn.minimum_body(GH))
    assert rep.is_pseudo_complete and rep.sandwich
    assert rep.ratio == pytest.approx((PHI + 1) / 2, abs=1e-12)
    assert rep.r + rep.R == pytest.approx(rep.D)


def test_pseudo_complete_rejects_asymmetric_gauge():
    with pytest.raises(GaugeNotSymmetric):
        fn.pseudo_complete_check(SQUARE, TRIANGLE)


def test_triangle_not_pseudo_complete_for_square_gauge():
    rep = fn.pseudo_complete_check(fn.centered(TRIANGLE), SQUARE)
    assert not rep.is_pseudo_complete
    assert rep.sandwich is None
