"""Planar and d-dimensional primitives shared by the Fréchet engine and solvers.

Points are plain tuples of floats.  Positions along a polygonal curve are
``ParamPoint`` values ordered lexicographically by (segment, local parameter),
which is all the "occurs before" relation on a curve needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

Point = tuple

# Absolute slack added to every closed ``<= eps`` test, scaled by max(1, eps).
DIST_TOL = 1e-9
# Adjacent per-segment windows closer than this are merged.
MERGE_TOL = 1e-9


def slack(eps: float) -> float:
    return DIST_TOL * max(1.0, eps)


def as_point(coords: Iterable[float]) -> Point:
    p = tuple(float(c) for c in coords)
    if not p:
        raise ValueError("point must have at least one coordinate")
    if not all(math.isfinite(c) for c in p):
        raise ValueError(f"non-finite coordinate in {p}")
    return p


def sub(p: Point, q: Point) -> Point:
    return tuple(a - b for a, b in zip(p, q))


def add(p: Point, q: Point) -> Point:
    return tuple(a + b for a, b in zip(p, q))


def scale(p: Point, s: float) -> Point:
    return tuple(a * s for a in p)


def dot(p: Point, q: Point) -> float:
    return sum(a * b for a, b in zip(p, q))


def norm(p: Point) -> float:
    return math.sqrt(dot(p, p))


def dist(p: Point, q: Point) -> float:
    return math.dist(p, q)


def lerp(p: Point, q: Point, t: float) -> Point:
    return tuple(a + t * (b - a) for a, b in zip(p, q))


def cross2(p: Point, q: Point) -> float:
    return p[0] * q[1] - p[1] * q[0]


def orient2(a: Point, b: Point, c: Point) -> float:
    """Twice the signed area of triangle abc (positive when counterclockwise)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def unit(p: Point) -> Point:
    n = norm(p)
    if n == 0.0:
        raise ValueError("zero vector has no direction")
    return scale(p, 1.0 / n)


def rotate(p: Point, angle: float) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    return (c * p[0] - s * p[1], s * p[0] + c * p[1])


def left_normal(d: Point) -> Point:
    return (-d[1], d[0])


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point

    def __post_init__(self):
        if len(self.start) != len(self.end):
            raise ValueError("segment endpoints differ in dimension")

    def at(self, t: float) -> Point:
        return lerp(self.start, self.end, t)

    @property
    def length(self) -> float:
        return dist(self.start, self.end)


@dataclass(frozen=True, order=True)
class ParamPoint:
    """Position on a curve: 1-based segment index plus local parameter."""

    segment_index: int
    local_t: float


@dataclass(frozen=True)
class ParamInterval:
    lo: ParamPoint
    hi: ParamPoint

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError(f"empty interval {self.lo} > {self.hi}")

    def contains(self, p: ParamPoint) -> bool:
        return self.lo <= p <= self.hi


@dataclass(frozen=True)
class PolyCurve:
    vertices: tuple

    def __init__(self, vertices: Iterable[Iterable[float]]):
        verts = tuple(as_point(v) for v in vertices)
        if len(verts) < 2:
            raise ValueError("a polygonal curve needs at least two vertices")
        if len({len(v) for v in verts}) != 1:
            raise ValueError("curve vertices differ in dimension")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_points(cls, points: Sequence[Point]) -> "PolyCurve":
        """Curve through ``points``; a single point becomes a stationary curve."""
        if len(points) == 1:
            return cls([points[0], points[0]])
        return cls(points)

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    @property
    def n_segments(self) -> int:
        return len(self.vertices) - 1

    def segment(self, i: int) -> Segment:
        if not 1 <= i <= self.n_segments:
            raise IndexError(f"segment index {i} outside 1..{self.n_segments}")
        return Segment(self.vertices[i - 1], self.vertices[i])

    def segments(self) -> list[Segment]:
        return [self.segment(i) for i in range(1, self.n_segments + 1)]

    @property
    def start(self) -> ParamPoint:
        return ParamPoint(1, 0.0)

    @property
    def end(self) -> ParamPoint:
        return ParamPoint(self.n_segments, 1.0)

    def normalize(self, p: ParamPoint) -> ParamPoint:
        """Move ``(i, 1)`` to ``(i + 1, 0)`` except on the last segment."""
        if p.local_t >= 1.0 and p.segment_index < self.n_segments:
            return ParamPoint(p.segment_index + 1, 0.0)
        return p

    def global_param(self, p: ParamPoint) -> float:
        return (p.segment_index - 1 + p.local_t) / self.n_segments

    def from_global(self, s: float) -> ParamPoint:
        x = min(max(s, 0.0), 1.0) * self.n_segments
        i = min(int(x), self.n_segments - 1)
        return ParamPoint(i + 1, x - i)

    def subcurve(self, frm: ParamPoint, to: ParamPoint) -> "PolyCurve":
        frm, to = self.normalize(frm), self.normalize(to)
        if to < frm:
            raise ValueError(f"subcurve bounds out of order: {frm} > {to}")
        pts = [point_at(self, frm)]
        for i in range(frm.segment_index, to.segment_index):
            pts.append(self.vertices[i])
        pts.append(point_at(self, to))
        return PolyCurve(pts)


def point_at(curve: PolyCurve, p: ParamPoint) -> Point:
    if not 0.0 <= p.local_t <= 1.0:
        raise ValueError(f"local parameter {p.local_t} outside [0, 1]")
    return curve.segment(p.segment_index).at(p.local_t)


def dist_point_segment(p: Point, seg: Segment) -> tuple[float, float]:
    """Distance from ``p`` to ``seg`` and the local parameter of the closest point."""
    d = sub(seg.end, seg.start)
    dd = dot(d, d)
    if dd == 0.0:
        return dist(p, seg.start), 0.0
    t = min(max(dot(sub(p, seg.start), d) / dd, 0.0), 1.0)
    return dist(p, seg.at(t)), t


def segment_ball_window(seg: Segment, center: Point, eps: float,
                        pad: float | None = None) -> tuple[float, float] | None:
    """Closed parameter window of ``seg`` inside the ball ``B(center, eps)``.

    The radius is widened by ``pad`` (default ``slack(eps)``) to absorb
    round-off in boundary-tight configurations.
    """
    if eps < 0:
        raise ValueError("eps must be non-negative")
    r = eps + (slack(eps) if pad is None else pad)
    d = sub(seg.end, seg.start)
    w = sub(seg.start, center)
    a = dot(d, d)
    if a == 0.0:
        return (0.0, 1.0) if dot(w, w) <= r * r else None
    # Distance to the perpendicular foot, measured directly: the textbook
    # discriminant b^2 - ac cancels badly when the center is far from seg.start.
    tm = -dot(d, w) / a
    h = dist(seg.at(tm), center)
    if h > r:
        return None
    half = math.sqrt((r - h) * (r + h) / a)
    t0 = tm - half
    t1 = tm + half
    if t1 < 0.0 or t0 > 1.0:
        return None
    return max(t0, 0.0), min(t1, 1.0)


def curve_ball_windows(curve: PolyCurve, center: Point, eps: float) -> list[ParamInterval]:
    """Maximal connected parameter intervals of ``curve`` within ``eps`` of ``center``."""
    out: list[list[ParamPoint]] = []
    for i, seg in enumerate(curve.segments(), start=1):
        w = segment_ball_window(seg, center, eps)
        if w is None:
            continue
        lo, hi = ParamPoint(i, w[0]), ParamPoint(i, w[1])
        if out:
            prev_hi = out[-1][1]
            if (prev_hi.segment_index == i - 1
                    and dist(point_at(curve, prev_hi), point_at(curve, lo)) <= MERGE_TOL):
                out[-1][1] = hi
                continue
        out.append([lo, hi])
    return [ParamInterval(curve.normalize(lo), curve.normalize(hi)) for lo, hi in out]


def convex_hull(points: Sequence[Point]) -> list[Point]:
    """Counterclockwise hull of 2-D points, collinear boundary points dropped."""
    if not points:
        raise ValueError("convex hull of an empty set")
    if any(len(p) != 2 for p in points):
        raise ValueError("convex_hull is 2-D only")
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and orient2(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def point_in_convex_polygon(p: Point, hull: Sequence[Point], tol: float = 0.0) -> bool:
    if len(hull) < 3:
        return False
    return all(orient2(hull[i], hull[(i + 1) % len(hull)], p) >= -tol for i in range(len(hull)))


def segment_segment_distance(s: Segment, t: Segment) -> float:
    """Euclidean distance between two 2-D segments."""
    if _segments_intersect(s, t):
        return 0.0
    return min(dist_point_segment(s.start, t)[0], dist_point_segment(s.end, t)[0],
               dist_point_segment(t.start, s)[0], dist_point_segment(t.end, s)[0])


def _segments_intersect(s: Segment, t: Segment) -> bool:
    a, b, c, d = s.start, s.end, t.start, t.end
    o1, o2 = orient2(a, b, c), orient2(a, b, d)
    o3, o4 = orient2(c, d, a), orient2(c, d, b)
    if ((o1 > 0) != (o2 > 0) and o1 != 0 and o2 != 0
            and (o3 > 0) != (o4 > 0) and o3 != 0 and o4 != 0):
        return True

    def on(p, q, r):
        return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
                and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))

    return ((o1 == 0 and on(a, b, c)) or (o2 == 0 and on(a, b, d))
            or (o3 == 0 and on(c, d, a)) or (o4 == 0 and on(c, d, b)))


def segment_polygon_distance(seg: Segment, hull: Sequence[Point]) -> float:
    """Distance from a 2-D segment to a convex polygon (0 when they meet)."""
    if len(hull) == 1:
        return dist_point_segment(hull[0], seg)[0]
    if point_in_convex_polygon(seg.start, hull) or point_in_convex_polygon(seg.end, hull):
        return 0.0
    edges = [Segment(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]
    if len(hull) == 2:
        edges = edges[:1]
    return min(segment_segment_distance(seg, e) for e in edges)


def line_intersection(p: Point, d: Point, q: Point, e: Point) -> Point:
    """Intersection of lines ``p + s d`` and ``q + t e`` in the plane."""
    den = cross2(d, e)
    if abs(den) < 1e-15:
        raise ValueError("parallel lines")
    s = cross2(sub(q, p), e) / den
    return add(p, scale(d, s))


def dist_point_line(p: Point, q: Point, d: Point) -> float:
    """Distance from ``p`` to the line through ``q`` with direction ``d``."""
    return abs(cross2(unit(d), sub(p, q)))
