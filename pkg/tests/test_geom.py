import json

import numpy as np
import pytest
from conftest import polygons
from hypothesis import given, settings
from hypothesis import strategies as st
from shapely.geometry import Polygon

import oracles
from planarmeans import geom
from planarmeans.errors import DegenerateInput, EmptyOrDegenerateIntersection, OriginNotInterior, ParseError


def _same_set(A, B, tol=1e-9):
    A, B = np.asarray(A), np.asarray(B)
    return len(A) == len(B) and all(np.min(np.linalg.norm(B - a, axis=1)) < tol for a in A)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 40), st.integers(0, 2**32 - 1))
def test_hull_matches_qhull(n, seed):
    pts = np.random.default_rng(seed).normal(size=(n, 2))
    P = geom.make_polygon(pts)
    assert _same_set(P.vertices, oracles.hull(pts))
    assert P.area == pytest.approx(oracles.area(pts), rel=1e-12)


def test_hull_drops_collinear_and_duplicates():
    P = geom.make_polygon([(0, 0), (1, 0), (2, 0), (2, 2), (2, 2), (0, 2), (1, 1)])
    assert P.vertices.tolist() == [[0, 0], [2, 0], [2, 2], [0, 2]]


@pytest.mark.parametrize("pts", [[(0, 0), (1, 1), (2, 2)], [(1, 1)] * 4, [(0, 0), (1, 0)], [(0, 0), (np.nan, 1), (1, 1)]])
def test_degenerate_inputs(pts):
    with pytest.raises(DegenerateInput):
        geom.make_polygon(pts)


def test_constructor_rejects_clockwise():
    with pytest.raises(DegenerateInput):
        geom.ConvexPolygon([(0, 0), (0, 1), (1, 0)])


@settings(max_examples=40, deadline=None)
@given(polygons(), polygons())
def test_intersection_matches_shapely(P, Q):
    g = Polygon(P.vertices).intersection(Polygon(Q.vertices))
    if g.area < 1e-6:
        with pytest.raises(EmptyOrDegenerateIntersection):
            geom.intersect(P, Q)
        return
    R = geom.intersect(P, Q)
    assert R.area == pytest.approx(g.area, rel=1e-9)
    assert _same_set(R.vertices, oracles.intersection(P.vertices, Q.vertices), 1e-7)


@settings(max_examples=40, deadline=None)
@given(polygons(), polygons())
def test_minkowski_sum_matches_pairwise_hull(P, Q):
    S = geom.minkowski_sum(P, Q)
    pairs = (P.vertices[:, None, :] + Q.vertices[None, :, :]).reshape(-1, 2)
    assert _same_set(S.vertices, oracles.hull(pairs), 1e-9)


@settings(max_examples=40, deadline=None)
@given(polygons())
def test_gauge_matches_facet_formula(P):
    K = geom.translate(P, -P.centroid)
    X = np.random.default_rng(0).normal(size=(25, 2))
    assert np.allclose(geom.gauge_many(K, X), oracles.gauge(K.vertices, X), rtol=1e-10)
    for v in K.vertices:
        assert geom.gauge(K, v) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(polygons())
def test_polar_support_is_gauge(P):
    # h_{K°}(u) = gauge_K(u), and K°° = K
    K = geom.translate(P, -P.centroid)
    Kp = geom.polar(K)
    for u in np.random.default_rng(1).normal(size=(10, 2)):
        assert geom.support(Kp, u) == pytest.approx(oracles.gauge(K.vertices, u)[0], rel=1e-9)
    assert _same_set(geom.polar(Kp).vertices, K.vertices, 1e-8)


def test_polar_requires_interior_origin():
    with pytest.raises(OriginNotInterior):
        geom.polar(geom.make_polygon([(1, 1), (2, 1), (1, 2)]))


def test_from_halfplanes_square():
    N = np.array([(1, 0), (0, 1), (-1, 0), (0, -1)], float)
    S = geom.from_halfplanes(N, [1, 1, 1, 1])
    assert S.area == pytest.approx(4.0)
    with pytest.raises(EmptyOrDegenerateIntersection):
        geom.from_halfplanes(N, [1, 1, -2, 1])


def test_linear_map_and_symmetry():
    K = geom.make_polygon([(-1, -1), (1, -1), (1, 1), (-1, 1)])
    M = np.array([[2.0, 1.0], [0.0, 1.0]])
    L = geom.linear_map(K, M)
    assert L.area == pytest.approx(4 * 2.0)
    assert geom.is_symmetric(L)
    assert not geom.is_symmetric(geom.make_polygon([(0, 1), (1, -1), (-1, -1)]))


def test_support_and_containment():
    T = geom.make_polygon([(0, 0), (1, 0), (0, 1)])
    assert geom.support(T, (1, 1)) == pytest.approx(1.0)
    assert T.contains((0.2, 0.2)) and not T.contains((0.6, 0.6))
    assert geom.make_polygon([(-1, -1), (2, -1), (-1, 2)]).contains_polygon(T)


def test_golden_house_crossings():
    phi = (1 + 5**0.5) / 2
    GH = geom.make_polygon([(1, 0), (-1, 0), (1, -1), (-1, -1), (0, phi)])
    cr = geom.boundary_crossings(GH)
    negK = geom.reflect(GH)
    for c in cr:
        assert abs(geom.gauge(GH, c.point) - 1) < 1e-9
        assert abs(geom.gauge(negK, c.point) - 1) < 1e-9


def test_square_crossings_are_arcs():
    Q = geom.make_polygon([(-1, -1), (1, -1), (1, 1), (-1, 1)])
    assert {c.kind for c in geom.boundary_crossings(Q)} == {"arc"}
    assert geom.transversal_crossings(Q) == []


@settings(max_examples=30, deadline=None)
@given(polygons())
def test_file_round_trip(tmp_path_factory, P):
    path = tmp_path_factory.mktemp("poly") / "p.json"
    geom.write_polygon(P, path)
    assert np.abs(geom.read_polygon(path).vertices - P.vertices).max() <= 1e-12


@pytest.mark.parametrize(
    "text", ["not json", "{}", '{"vertices": 3}', '{"vertices": [[1, 2, 3]]}', '{"vertices": [["a", 1]]}']
)
def test_parse_errors(tmp_path, text):
    p = tmp_path / "bad.json"
    p.write_text(text)
    with pytest.raises(ParseError):
        geom.read_polygon(p)


def test_dict_format():
    K = geom.make_polygon([(0, 0), (1, 0), (0, 1)])
    assert json.loads(json.dumps(geom.polygon_to_dict(K))) == {"vertices": [[0, 0], [1, 0], [0, 1]]}
