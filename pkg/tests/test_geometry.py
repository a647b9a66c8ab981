import math

import numpy as np
import pytest

from edgewalk.errors import (
    CoincidentCentersError,
    InputError,
    NoForwardCandidateError,
)
from edgewalk.geometry import (
    Domain,
    Point2,
    circle_circle_intersection,
    cross,
    distance,
    midpoint,
    perimeter_circle_intersection,
    select_forward,
    wrapped_delta,
)


def test_point_basics():
    a = Point2(0.0, 0.0)
    b = Point2(3.0, 4.0)
    assert distance(a, b) == 5.0
    assert midpoint(a, b) == Point2(1.5, 2.0)


def test_cross_sign_is_left_turn():
    o = Point2(0.0, 0.0)
    a = Point2(1.0, 0.0)
    assert cross(o, a, Point2(1.0, 1.0)) > 0
    assert cross(o, a, Point2(1.0, -1.0)) < 0
    assert cross(o, a, Point2(2.0, 0.0)) == 0.0


class TestDomain:
    def test_rejects_degenerate_extent(self):
        with pytest.raises(InputError):
            Domain(0.0, 0.0, 0.0, 1.0)
        with pytest.raises(InputError):
            Domain(1.0, 0.0, 0.0, 1.0)
        with pytest.raises(InputError):
            Domain(0.0, math.inf, 0.0, 1.0)

    def test_measures(self):
        d = Domain(-1.0, 2.0, 0.0, 4.0)
        assert d.width == 3.0
        assert d.height == 4.0
        assert d.perimeter == 14.0
        assert d.diagonal == 5.0
        assert d.center == Point2(0.5, 2.0)

    def test_corners_counterclockwise_from_lower_left(self):
        d = Domain(0.0, 2.0, 0.0, 1.0)
        assert list(d.corners()) == [
            Point2(0.0, 0.0),
            Point2(2.0, 0.0),
            Point2(2.0, 1.0),
            Point2(0.0, 1.0),
        ]

    def test_contains_is_closed_with_tolerance(self):
        d = Domain(0.0, 1.0, 0.0, 1.0)
        assert d.contains(Point2(0.0, 0.0))
        assert d.contains(Point2(1.0, 1.0))
        assert not d.contains(Point2(1.0 + 1e-6, 0.5))
        assert d.contains(Point2(1.0 + 1e-6, 0.5), tol=1e-5)

    def test_point_at_walks_edges_counterclockwise(self):
        d = Domain(0.0, 2.0, 0.0, 1.0)
        assert d.point_at(0.0) == Point2(0.0, 0.0)
        assert d.point_at(1.0) == Point2(1.0, 0.0)
        assert d.point_at(2.0) == Point2(2.0, 0.0)
        assert d.point_at(2.5) == Point2(2.0, 0.5)
        assert d.point_at(4.0) == Point2(1.0, 1.0)
        assert d.point_at(5.5) == Point2(0.0, 0.5)
        # wraps modulo the perimeter
        assert d.point_at(6.0 + 1.0) == Point2(1.0, 0.0)
        assert d.point_at(-1.0) == Point2(0.0, 1.0)

    def test_arclength_inverts_point_at(self):
        d = Domain(-3.0, 5.0, 2.0, 4.5)
        rng = np.random.default_rng(7)
        for s in rng.uniform(0.0, d.perimeter, size=200):
            p = d.point_at(float(s))
            back = d.arclength_of(p)
            assert min(abs(back - s), d.perimeter - abs(back - s)) < 1e-9

    def test_arclength_rejects_interior_point(self):
        d = Domain(0.0, 1.0, 0.0, 1.0)
        with pytest.raises(InputError):
            d.arclength_of(Point2(0.5, 0.5))


class TestCircleCircleIntersection:
    def test_standard_two_point_case(self):
        pts = circle_circle_intersection(
            Point2(0.0, 0.0), Point2(1.0, 0.0), 1.0, 1e-12
        )
        assert len(pts) == 2
        h = math.sqrt(3.0) / 2.0
        # left of the center-to-center direction comes first
        assert pts[0].x == pytest.approx(0.5)
        assert pts[0].y == pytest.approx(h)
        assert pts[1].y == pytest.approx(-h)

    def test_tangent_gives_single_midpoint(self):
        pts = circle_circle_intersection(
            Point2(0.0, 0.0), Point2(2.0, 0.0), 1.0, 1e-9
        )
        assert len(pts) == 1
        assert pts[0] == Point2(1.0, 0.0)

    def test_disjoint_gives_nothing(self):
        assert (
            circle_circle_intersection(Point2(0.0, 0.0), Point2(5.0, 0.0), 1.0, 1e-12)
            == []
        )

    def test_coincident_centers_raise(self):
        with pytest.raises(CoincidentCentersError):
            circle_circle_intersection(Point2(1.0, 1.0), Point2(1.0, 1.0), 1.0, 1e-12)

    def test_points_lie_on_both_circles(self):
        rng = np.random.default_rng(11)
        for _ in range(300):
            c1 = Point2(*rng.uniform(-5, 5, 2))
            r = float(rng.uniform(0.1, 3.0))
            d = float(rng.uniform(0.2, 1.8)) * r
            ang = float(rng.uniform(0, 2 * math.pi))
            c2 = Point2(c1.x + d * math.cos(ang), c1.y + d * math.sin(ang))
            for p in circle_circle_intersection(c1, c2, r, 1e-12):
                assert distance(p, c1) == pytest.approx(r, abs=1e-9)
                assert distance(p, c2) == pytest.approx(r, abs=1e-9)


class TestSelectForward:
    def test_picks_left_side_candidate(self):
        inner = Point2(0.0, 0.0)
        outer = Point2(1.0, 0.0)
        up = Point2(0.5, 0.8)
        down = Point2(0.5, -0.8)
        assert select_forward(inner, outer, [down, up], 1e-9) == up
        assert select_forward(inner, outer, [up, down], 1e-9) == up

    def test_rejects_all_backward(self):
        inner = Point2(0.0, 0.0)
        outer = Point2(1.0, 0.0)
        with pytest.raises(NoForwardCandidateError):
            select_forward(inner, outer, [Point2(0.5, -0.8)], 1e-9)
        with pytest.raises(NoForwardCandidateError):
            select_forward(inner, outer, [], 1e-9)

    def test_rejects_fused_pair(self):
        p = Point2(2.0, 2.0)
        with pytest.raises(CoincidentCentersError):
            select_forward(p, p, [Point2(0.0, 0.0)], 1e-9)


class TestPerimeterCircleIntersection:
    def test_center_circle_hits_all_four_edges(self):
        d = Domain(0.0, 2.0, 0.0, 2.0)
        hits = perimeter_circle_intersection(d, Point2(1.0, 1.0), 1.2)
        assert len(hits) == 8
        ss = [s for _, s in hits]
        assert ss == sorted(ss)
        for p, s in hits:
            assert distance(p, Point2(1.0, 1.0)) == pytest.approx(1.2, abs=1e-9)
            assert d.point_at(s) == pytest.approx(p, abs=1e-9)

    def test_corner_crossings_deduplicate(self):
        # circle through two opposite corners of the unit square
        d = Domain(0.0, 1.0, 0.0, 1.0)
        hits = perimeter_circle_intersection(d, Point2(0.0, 0.0), 1.0)
        assert len(hits) == 2
        assert hits[0][0] == pytest.approx(Point2(1.0, 0.0), abs=1e-9)
        assert hits[1][0] == pytest.approx(Point2(0.0, 1.0), abs=1e-9)

    def test_small_circle_on_one_edge(self):
        d = Domain(0.0, 4.0, 0.0, 4.0)
        hits = perimeter_circle_intersection(d, Point2(2.0, 0.0), 0.5)
        assert len(hits) == 2
        assert hits[0][0] == pytest.approx(Point2(1.5, 0.0), abs=1e-9)
        assert hits[1][0] == pytest.approx(Point2(2.5, 0.0), abs=1e-9)

    def test_interior_circle_misses_perimeter(self):
        d = Domain(0.0, 4.0, 0.0, 4.0)
        assert perimeter_circle_intersection(d, Point2(2.0, 2.0), 0.5) == []


def test_wrapped_delta_signs_and_seam():
    assert wrapped_delta(1.0, 3.0, 8.0) == 2.0
    assert wrapped_delta(3.0, 1.0, 8.0) == -2.0
    assert wrapped_delta(7.9, 0.1, 8.0) == pytest.approx(0.2)
    assert wrapped_delta(0.1, 7.9, 8.0) == pytest.approx(-0.2)
    # exactly half a period maps to the positive side
    assert wrapped_delta(0.0, 4.0, 8.0) == 4.0
