import numpy as np
import pytest
from hypothesis import strategies as st

from planarmeans import geom


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@st.composite
def polygons(draw, min_vertices=3, max_vertices=12):
    """Hulls of random points on a circle with jittered radii (area bounded away from 0)."""
    n = draw(st.integers(min_vertices, max_vertices))
    seed = draw(st.integers(0, 2**32 - 1))
    r = np.random.default_rng(seed)
    while True:
        th = np.sort(r.uniform(0, 2 * np.pi, n))
        rad = r.uniform(0.5, 1.5, n)
        pts = np.column_stack((rad * np.cos(th), rad * np.sin(th))) + r.normal(0, 0.3, 2)
        try:
            P = geom.make_polygon(pts)
        except Exception:
            continue
        if P.area > 0.05:
            return P


ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion():
    """Record a one-line verdict for an acceptance criterion, then assert it."""

    def check(number: int, title: str, ok: bool, detail: str) -> None:
        line = f"criterion {number:2d}  {'PASS' if ok else 'FAIL'}  {title}: {detail}"
        ACCEPTANCE.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
