"""Planar primitives used by the boundary walks.

Everything operates on plain floats.  The walk code never needs arrays here;
numpy enters only at the metrics layer where point sets get large.

Perimeter convention: a rectangular domain's boundary is parameterized by
arclength s in [0, P), counter-clockwise, starting at the lower-left corner
(x_min, y_min).  All perimeter-related helpers share this convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import CoincidentCentersError, InputError, NoForwardCandidateError


class Point2(NamedTuple):
    x: float
    y: float


def distance(a: Point2, b: Point2) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def midpoint(a: Point2, b: Point2) -> Point2:
    return Point2(0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]))


def cross(o: Point2, a: Point2, b: Point2) -> float:
    """Cross product of (a - o) x (b - o); positive when o->a->b turns left."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Domain:
    """Axis-aligned rectangle [x_min, x_max] x [y_min, y_max]."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def __post_init__(self) -> None:
        vals = (self.x_min, self.x_max, self.y_min, self.y_max)
        if not all(math.isfinite(v) for v in vals):
            raise InputError(f"domain bounds must be finite, got {vals}")
        if self.x_max <= self.x_min or self.y_max <= self.y_min:
            raise InputError(f"domain must have positive extent, got {vals}")

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    @property
    def diagonal(self) -> float:
        return math.hypot(self.width, self.height)

    @property
    def perimeter(self) -> float:
        return 2.0 * (self.width + self.height)

    @property
    def center(self) -> Point2:
        return Point2(0.5 * (self.x_min + self.x_max), 0.5 * (self.y_min + self.y_max))

    @property
    def geom_tol(self) -> float:
        """Geometric tolerance used for containment and dedup decisions."""
        return 1e-9 * max(1.0, self.diagonal)

    def corners(self) -> tuple[Point2, Point2, Point2, Point2]:
        """Corners counter-clockwise from the lower-left."""
        return (
            Point2(self.x_min, self.y_min),
            Point2(self.x_max, self.y_min),
            Point2(self.x_max, self.y_max),
            Point2(self.x_min, self.y_max),
        )

    def contains(self, p: Point2, tol: float = 0.0) -> bool:
        """Closed-rectangle membership, optionally expanded by tol."""
        return (
            self.x_min - tol <= p[0] <= self.x_max + tol
            and self.y_min - tol <= p[1] <= self.y_max + tol
        )

    def point_at(self, s: float) -> Point2:
        """Perimeter point at arclength s (wrapped into [0, P))."""
        s = s % self.perimeter
        w, h = self.width, self.height
        if s <= w:
            return Point2(self.x_min + s, self.y_min)
        s -= w
        if s <= h:
            return Point2(self.x_max, self.y_min + s)
        s -= h
        if s <= w:
            return Point2(self.x_max - s, self.y_max)
        s -= w
        return Point2(self.x_min, self.y_max - s)

    def arclength_of(self, p: Point2, tol: float | None = None) -> float:
        """Arclength of a point lying on the perimeter (within tol)."""
        if tol is None:
            tol = self.geom_tol
        w, h = self.width, self.height
        x, y = p
        if abs(y - self.y_min) <= tol and self.x_min - tol <= x <= self.x_max + tol:
            return (min(max(x - self.x_min, 0.0), w)) % self.perimeter
        if abs(x - self.x_max) <= tol and self.y_min - tol <= y <= self.y_max + tol:
            return w + min(max(y - self.y_min, 0.0), h)
        if abs(y - self.y_max) <= tol and self.x_min - tol <= x <= self.x_max + tol:
            return w + h + min(max(self.x_max - x, 0.0), w)
        if abs(x - self.x_min) <= tol and self.y_min - tol <= y <= self.y_max + tol:
            return (w + h + w + min(max(self.y_max - y, 0.0), h)) % self.perimeter
        raise InputError(f"point {p} does not lie on the domain perimeter")


def circle_circle_intersection(
    c1: Point2, c2: Point2, r: float, tol: float
) -> list[Point2]:
    """Intersect two circles of equal radius r centered at c1 and c2.

    Returns [] when the circles are farther apart than 2r, one point at
    tangency, otherwise two points.  The two-point case lists the point on
    the left of the directed line c1->c2 first.  Raises for (nearly)
    coincident centers, where the intersection is not a finite point set.
    """
    d = distance(c1, c2)
    if d <= tol:
        raise CoincidentCentersError(
            f"circle centers {c1} and {c2} coincide within tolerance {tol}"
        )
    if d > 2.0 * r + tol:
        return []
    mid = midpoint(c1, c2)
    if d >= 2.0 * r - tol:
        return [mid]
    h = math.sqrt(r * r - 0.25 * d * d)
    # unit perpendicular of c1->c2, rotated +90 degrees
    px = -(c2[1] - c1[1]) / d
    py = (c2[0] - c1[0]) / d
    return [
        Point2(mid[0] + h * px, mid[1] + h * py),
        Point2(mid[0] - h * px, mid[1] - h * py),
    ]


def select_forward(
    inner_end: Point2, outer_end: Point2, candidates: list[Point2], tol: float
) -> Point2:
    """Pick the candidate strictly on the forward side of the walk.

    Forward means a positive cross product of (outer_end - inner_end) with
    (candidate - inner_end).  The cross product is normalized to a signed
    perpendicular offset so the threshold is a length, comparable to tol.
    """
    base = distance(inner_end, outer_end)
    if base <= tol:
        raise CoincidentCentersError(
            f"walk endpoints {inner_end} and {outer_end} coincide within {tol}"
        )
    best: Point2 | None = None
    best_offset = tol
    for cand in candidates:
        offset = cross(inner_end, outer_end, cand) / base
        if offset > best_offset:
            best = cand
            best_offset = offset
    if best is None:
        raise NoForwardCandidateError(
            f"no candidate among {candidates} lies forward of "
            f"({inner_end}, {outer_end})"
        )
    return best


def _segment_circle_hits(
    ax: float, ay: float, bx: float, by: float, center: Point2, r: float, tol: float
) -> list[float]:
    """Parameters t in [0,1] where segment a->b meets the circle."""
    dx, dy = bx - ax, by - ay
    fx, fy = ax - center[0], ay - center[1]
    a = dx * dx + dy * dy
    b = 2.0 * (fx * dx + fy * dy)
    c = fx * fx + fy * fy - r * r
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return []
    sq = math.sqrt(disc)
    seg_len = math.sqrt(a)
    t_tol = tol / seg_len if seg_len > 0.0 else 0.0
    out = []
    for t in ((-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)):
        if -t_tol <= t <= 1.0 + t_tol:
            out.append(min(max(t, 0.0), 1.0))
    if len(out) == 2 and abs(out[0] - out[1]) <= t_tol:
        out.pop()
    return out


def perimeter_circle_intersection(
    domain: Domain, center: Point2, r: float
) -> list[tuple[Point2, float]]:
    """Points where the circle around center meets the domain perimeter.

    Returns (point, arclength) pairs sorted by arclength, with duplicates at
    corners merged.  May be empty when the circle misses the perimeter.
    """
    tol = domain.geom_tol
    cs = domain.corners()
    hits: list[tuple[Point2, float]] = []
    s_edge = 0.0
    for i in range(4):
        a, b = cs[i], cs[(i + 1) % 4]
        edge_len = distance(a, b)
        for t in _segment_circle_hits(a[0], a[1], b[0], b[1], center, r, tol):
            p = Point2(a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
            hits.append((p, (s_edge + t * edge_len) % domain.perimeter))
        s_edge += edge_len
    hits.sort(key=lambda h: h[1])
    deduped: list[tuple[Point2, float]] = []
    for p, s in hits:
        if deduped and distance(deduped[-1][0], p) <= tol:
            continue
        deduped.append((p, s))
    if len(deduped) > 1 and distance(deduped[0][0], deduped[-1][0]) <= tol:
        deduped.pop()
    return deduped


def wrapped_delta(s_from: float, s_to: float, period: float) -> float:
    """Signed arclength step from s_from to s_to, wrapped into (-P/2, P/2]."""
    d = (s_to - s_from) % period
    if d > 0.5 * period:
        d -= period
    return d
