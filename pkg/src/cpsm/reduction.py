"""(3,B2)-SAT to curve/point-set matching: clause ring, alpha-corners, gadgets.

Everything is laid out in units of eps.  Planning happens with eps = 1 and
the finished layout is scaled, so every coordinate is a multiple of eps up
to rounding.

Each variable gets one gadget: five alpha-corners bending the same way.  The
first corner aims the forward path through the clause points of the positive
literal, corners 2-4 turn it around, and it then crosses the ring again
through the clause points of the negative literal before corner 5 caps it and
sends the return path back.  The matching curve has two ways through a
gadget.  The TRUE path runs on the forward path across the positive clause
points and hugs the cylinder boundary across the negative ones; the FALSE
path does the opposite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Sequence

from .geometry import (Point, Segment, add, convex_hull, cross2, dist, dist_point_line, dot,
                       left_normal, line_intersection, norm, rotate, scale, segment_polygon_distance,
                       sub, unit)
from .sat import Assignment, Formula, sat_bruteforce, validate_b2
from .solvers import Instance, Variant, dedupe_witness, verify_witness

STRIP_HALF_WIDTH = 7.0   # clause strips, in eps
CORNER_STRIP = 7.0       # half-thickness of the band a corner must fit in, in eps
CHORD_SEPARATION = 14.0  # minimum distance between parallel clause chords, in eps
MIN_ALPHA = math.pi / 4
MAX_ALPHA = math.pi / 2
HULL_MARGIN = 2.0        # planner clearance from the hull; validation only needs > 1
RADIUS_GAP = 30.0        # new gadgets start this far beyond everything placed so far
CONNECTOR_STEP = math.radians(10)

CORNER_NAMES = ("A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L")


class PlacementError(RuntimeError):
    """The planner could not place a gadget; indicates a construction bug."""


# ---------------------------------------------------------------- clause ring

@dataclass(frozen=True)
class ClauseRing:
    radius: float
    points: tuple
    eps: float
    center: Point = (0.0, 0.0)

    @property
    def count(self) -> int:
        return len(self.points)

    def parallel_chord_separations(self) -> list[tuple[tuple[int, int], tuple[int, int], float]]:
        """Distances between every pair of distinct parallel chords."""
        return _parallel_chords(self.points)


def _parallel_chords(points: Sequence[Point]):
    m = len(points)
    chords = [(i, j) for i in range(m) for j in range(i + 1, m)]
    out = []
    for x in range(len(chords)):
        i, j = chords[x]
        d = unit(sub(points[j], points[i]))
        nrm = left_normal(d)
        for y in range(x + 1, len(chords)):
            k, l = chords[y]
            e = unit(sub(points[l], points[k]))
            if abs(cross2(d, e)) > 1e-9:
                continue
            out.append(((i, j), (k, l), abs(dot(sub(points[k], points[i]), nrm))))
    return out


def _ring_points(m: int, radius: float) -> tuple:
    return tuple((radius * math.cos(math.pi / m + 2 * math.pi * i / m),
                  radius * math.sin(math.pi / m + 2 * math.pi * i / m)) for i in range(m))


def build_clause_ring(clause_count: int, eps: float) -> ClauseRing:
    """Clause points equally spaced on a circle, the first at angle pi/m.

    The radius is m^2 eps unless the parallel-chord rule needs more, in which
    case the smallest sufficient radius is padded by 1%.
    """
    if clause_count < 1:
        raise ValueError("clause_count must be at least 1")
    if not eps > 0:
        raise ValueError("eps must be positive")
    m = clause_count
    seps = [s for _, _, s in _parallel_chords(_ring_points(m, 1.0))]
    radius = m * m * eps
    if seps:
        needed = CHORD_SEPARATION * eps / min(seps)
        if needed > radius:
            radius = needed * 1.01
    return ClauseRing(radius, _ring_points(m, radius), eps)


@dataclass(frozen=True)
class ClauseStrip:
    """Closed band of half-width 7 eps around the line through two clause points."""

    pair: tuple
    origin: Point
    direction: Point
    half_width: float

    def distance(self, p: Point) -> float:
        return dist_point_line(p, self.origin, self.direction)

    def contains(self, p: Point, tol: float = 0.0) -> bool:
        return self.distance(p) <= self.half_width + tol


def clause_strip(ring: ClauseRing, i: int, j: int) -> ClauseStrip:
    if i == j:
        raise ValueError("a strip needs two distinct clause points")
    p, q = ring.points[i], ring.points[j]
    return ClauseStrip((min(i, j), max(i, j)), p, unit(sub(q, p)), STRIP_HALF_WIDTH * ring.eps)


# --------------------------------------------------------------- alpha-corner

@dataclass(frozen=True)
class CornerSpec:
    alpha: float
    eps: float
    origin: Point     # B
    heading: Point    # direction of AB
    bend: int         # +1 turns left, -1 turns right
    points: dict = field(compare=False)

    def __getitem__(self, name: str) -> Point:
        return self.points[name]

    @property
    def out_heading(self) -> Point:
        return rotate(self.heading, self.bend * self.alpha)


def make_alpha_corner(frame: tuple, alpha: float, eps: float, bend: int = 1) -> CornerSpec:
    """Corner with B at ``frame[0]`` entering along ``frame[1]`` and turning by alpha.

    AB and DE are the forward segments around the turn, K and L sit eps inside
    them, and the return path runs 2 eps outside through J, H, G, F.
    """
    if not 0 < alpha < math.pi:
        raise ValueError("alpha must lie in (0, pi)")
    if not eps > 0:
        raise ValueError("eps must be positive")
    if bend not in (1, -1):
        raise ValueError("bend must be +1 or -1")
    B = tuple(float(c) for c in frame[0])
    u = unit(frame[1])
    v = rotate(u, bend * alpha)
    nu = scale(left_normal(u), bend * eps)
    nv = scale(left_normal(v), bend * eps)
    side = 2 * eps / math.sin(alpha)
    lam = (3 + math.cos(alpha)) / math.sin(alpha) * eps
    A = sub(B, scale(u, lam))
    C = add(B, scale(v, side))
    D = add(C, scale(u, side))
    E = add(D, scale(v, lam))
    K = sub(D, nu)
    L = sub(B, nv)
    J = sub(A, scale(nu, 2))
    F = sub(E, scale(nv, 2))
    kl = sub(K, L)
    H = line_intersection(L, kl, sub(B, scale(nu, 2)), u)
    G = line_intersection(L, kl, sub(D, scale(nv, 2)), v)
    pts = dict(A=A, B=B, C=C, D=D, E=E, F=F, G=G, H=H, I=J, J=J, K=K, L=L)
    return CornerSpec(alpha, eps, B, u, bend, pts)


def _angle_at(p: Point, apex: Point, q: Point) -> float:
    a, b = sub(p, apex), sub(q, apex)
    return math.atan2(abs(cross2(a, b)), dot(a, b))


def corner_violations(c: CornerSpec, tol: float | None = None) -> list[str]:
    """Re-check the defining constraints of an alpha-corner from its points."""
    e = c.eps
    tol = 1e-9 * e if tol is None else tol
    P = c.points
    out = []

    def check(label, value, target):
        if abs(value - target) > tol:
            out.append(f"{label}: {value!r} != {target!r}")

    check("|BL|", dist(P["B"], P["L"]), e)
    check("|DK|", dist(P["D"], P["K"]), e)
    ab = sub(P["B"], P["A"])
    de = sub(P["E"], P["D"])
    check("dist(K, AB)", dist_point_line(P["K"], P["A"], ab), e)
    check("dist(L, DE)", dist_point_line(P["L"], P["D"], de), e)
    kl = sub(P["K"], P["L"])
    check("G off line KL", dist_point_line(P["G"], P["L"], kl), 0.0)
    check("H off line KL", dist_point_line(P["H"], P["L"], kl), 0.0)
    m1 = scale(add(P["A"], P["J"]), 0.5)
    m2 = scale(add(P["E"], P["F"]), 0.5)
    check("C off midpoint line", dist_point_line(P["C"], m1, sub(m2, m1)), 0.0)
    # Angles are compared in eps-free units, scaled so the tolerance still bites.
    check("angle ABC", _angle_at(P["A"], P["B"], P["C"]) * e, (math.pi - c.alpha) * e)
    check("angle JHL", _angle_at(P["J"], P["H"], P["L"]) * e, (math.pi - c.alpha / 2) * e)
    for name in CORNER_NAMES:
        d = dist_point_line(P[name], P["A"], ab)
        if d > CORNER_STRIP * e + tol:
            out.append(f"{name} lies {d / e:.3f} eps from AB, outside the 14 eps strip")
    return out


# ------------------------------------------------------------------- planning

@dataclass(frozen=True)
class Role:
    kind: str              # clause | corner-outer | corner-inner | split | joint
    clause: int | None = None

    def __str__(self):
        names = {"clause": "ClausePoint", "corner-outer": "CornerOuter",
                 "corner-inner": "CornerInner", "split": "SplitPoint", "joint": "Joint"}
        base = names[self.kind]
        return f"{base}({self.clause})" if self.kind == "clause" else base

    @classmethod
    def parse(cls, text: str) -> "Role":
        if text.startswith("ClausePoint(") and text.endswith(")"):
            return cls("clause", int(text[len("ClausePoint("):-1]))
        kinds = {"CornerOuter": "corner-outer", "CornerInner": "corner-inner",
                 "SplitPoint": "split", "Joint": "joint"}
        if text not in kinds:
            raise ValueError(f"unknown role {text!r}")
        return cls(kinds[text])


@dataclass(frozen=True)
class Gadget:
    variable: int
    pos_clauses: tuple      # clause indices on the positive line, in travel order
    neg_clauses: tuple
    corners: tuple          # CornerSpec x 5
    prefix: tuple           # connector joints, A1 and the opening split point
    true_path: tuple
    false_path: tuple
    suffix: tuple           # closing split point and the whole return path
    exempt_segments: tuple  # 1-based P segment indices allowed to cross the hull
    point_range: tuple      # [start, stop) into instance.points
    vertex_range: tuple     # [start, stop) into the P vertex list


@dataclass(frozen=True)
class ReductionOutput:
    formula: Formula
    eps: float
    instance: Instance
    roles: tuple
    ring: ClauseRing
    gadgets: tuple

    @property
    def corners(self) -> list[CornerSpec]:
        return [c for g in self.gadgets for c in g.corners]


@dataclass
class _Line:
    point: Point
    direction: Point

    def at(self, t: float) -> Point:
        return add(self.point, scale(self.direction, t))

    def param(self, p: Point) -> float:
        return dot(sub(p, self.point), self.direction)

    def shifted(self, offset: Point) -> "_Line":
        return _Line(add(self.point, offset), self.direction)


def _inner(d: Point, bend: int) -> Point:
    return scale(left_normal(d), bend)


def _corner_footprint(c: CornerSpec) -> list[Point]:
    return [c.points[n] for n in CORNER_NAMES]


def _outside_strips(points, strips, tol=1e-9) -> bool:
    return all(not s.contains(p, tol) for s in strips for p in points)


def _clear_of_hull(segments, hull, margin) -> bool:
    return all(segment_polygon_distance(s, hull) > margin for s in segments)


def _in_order(line: _Line, before: CornerSpec, after: CornerSpec, between=()) -> bool:
    """Footprint of ``before`` ends, then ``between``, then ``after`` starts, along the line."""
    hi = max(line.param(p) for p in _corner_footprint(before))
    lo = min(line.param(p) for p in _corner_footprint(after))
    mids = [line.param(p) for p in between]
    return hi < lo and all(hi + 1.0 < t < lo - 1.0 for t in mids)


def _corner_segments(c: CornerSpec, first: bool = False, last: bool = False) -> list[Segment]:
    P = c.points
    segs = [Segment(P["B"], P["C"]), Segment(P["C"], P["D"]), Segment(P["G"], P["H"])]
    if first:
        segs += [Segment(P["A"], P["B"]), Segment(P["H"], P["J"])]
    if last:
        segs += [Segment(P["D"], P["E"]), Segment(P["E"], P["F"]), Segment(P["F"], P["G"])]
    return segs


def _split_options():
    grid = [MIN_ALPHA + k * (MAX_ALPHA - MIN_ALPHA) / 4 for k in range(5)]
    return grid


def plan_corner_chain(entry: tuple, target: tuple, ring: ClauseRing, forbidden_strips,
                      hull, bend: int, rho: float) -> list[CornerSpec]:
    """Three same-bend corners turning the directed line ``entry`` into ``target``.

    Corner 2 sits on ``entry`` beyond the ring and corner 4 feeds ``target``
    before the ring; corner 3 is wherever their connecting lines meet.  Radii
    and the split of the total turn are searched on a small grid, nearest
    placements first.  Raises PlacementError if nothing fits.
    """
    ent = _Line(entry[0], unit(entry[1]))
    tgt = _Line(target[0], unit(target[1]))
    turn = (bend * (math.atan2(tgt.direction[1], tgt.direction[0])
                    - math.atan2(ent.direction[1], ent.direction[0]))) % (2 * math.pi)
    if not 3 * MIN_ALPHA - 1e-12 <= turn <= 3 * MAX_ALPHA + 1e-12:
        raise PlacementError(f"total turn {turn:.3f} outside what three corners can make")
    center = ring.center
    factors = (1.0, 1.3, 1.7, 2.2, 3.0)
    grid = _split_options()
    splits = []
    for a2 in grid:
        for a4 in grid:
            a3 = turn - a2 - a4
            if MIN_ALPHA - 1e-12 <= a3 <= MAX_ALPHA + 1e-12:
                splits.append((a2, min(max(a3, MIN_ALPHA), MAX_ALPHA), a4))
    splits.sort(key=lambda s: max(s) - min(s))
    t_ent = ent.param(center)
    t_tgt = tgt.param(center)
    tgt_inner = tgt.shifted(scale(_inner(tgt.direction, bend), 2.0))
    for f2 in factors:
        for f4 in factors:
            for a2, a3, a4 in splits:
                c2 = make_alpha_corner((ent.at(t_ent + f2 * rho), ent.direction), a2, 1.0, bend)
                d2 = c2.out_heading
                l2 = _Line(sub(c2["B"], scale(_inner(d2, bend), 2.0)), d2)
                d3 = rotate(tgt.direction, -bend * a4)
                b4 = tgt_inner.at(t_tgt - f4 * rho)
                l3 = _Line(b4, d3)
                try:
                    b3 = line_intersection(l2.point, d2, add(b4, scale(_inner(d3, bend), 2.0)), d3)
                except ValueError:
                    continue
                c3 = make_alpha_corner((b3, d2), a3, 1.0, bend)
                c4 = make_alpha_corner((b4, d3), a4, 1.0, bend)
                if not (_in_order(l2, c2, c3) and _in_order(l3, c3, c4)):
                    continue
                chain = [c2, c3, c4]
                if not _outside_strips([p for c in chain for p in _corner_footprint(c)], forbidden_strips):
                    continue
                segs = [s for c in chain for s in _corner_segments(c)]
                segs += [Segment(c2["D"], c3["B"]), Segment(c3["D"], c4["B"])]
                if not _clear_of_hull(segs, hull, HULL_MARGIN):
                    continue
                return chain
    raise PlacementError("no corner chain fits")


def _plan_end_corner(line: _Line, t: float, bend: int, at_entry: bool) -> CornerSpec:
    if at_entry:
        u = rotate(line.direction, -bend * MAX_ALPHA)
        B = add(line.at(t), scale(_inner(line.direction, bend), 2.0))
        return make_alpha_corner((B, u), MAX_ALPHA, 1.0, bend)
    return make_alpha_corner((line.at(t), line.direction), MAX_ALPHA, 1.0, bend)


def _plan_gadget(ring: ClauseRing, pos: tuple, neg: tuple, strips, hull, rho: float):
    """Pick orientation, end corners and chain for one variable (eps = 1 units)."""
    factors = (1.0, 1.3, 1.7, 2.2, 3.0)
    C = ring.points
    for bend in (1, -1):
        for sp in (1, -1):
            for sn in (1, -1):
                lp = _Line(C[pos[0]], unit(scale(sub(C[pos[1]], C[pos[0]]), sp)))
                ln = _Line(C[neg[0]], unit(scale(sub(C[neg[1]], C[neg[0]]), sn)))
                pos_pts = [C[j] for j in pos]
                neg_pts = [C[j] for j in neg]
                tp, tn = lp.param(ring.center), ln.param(ring.center)
                first = last = None
                for f in factors:
                    c1 = _plan_end_corner(lp, tp - f * rho, bend, True)
                    if (_outside_strips(_corner_footprint(c1), strips)
                            and _clear_of_hull(_corner_segments(c1, first=True), hull, HULL_MARGIN)):
                        first = c1
                        break
                for f in factors:
                    c5 = _plan_end_corner(ln, tn + f * rho, bend, False)
                    if (_outside_strips(_corner_footprint(c5), strips)
                            and _clear_of_hull(_corner_segments(c5, last=True), hull, HULL_MARGIN)):
                        last = c5
                        break
                if first is None or last is None:
                    continue
                try:
                    chain = plan_corner_chain((lp.point, lp.direction), (ln.point, ln.direction),
                                              ring, strips, hull, bend, rho)
                except PlacementError:
                    continue
                corners = [first, *chain, last]
                if not (_in_order(lp, corners[0], corners[1], pos_pts)
                        and _in_order(ln, corners[3], corners[4], neg_pts)):
                    continue
                pos_sorted = tuple(sorted(pos, key=lambda j: lp.param(C[j])))
                neg_sorted = tuple(sorted(neg, key=lambda j: ln.param(C[j])))
                return corners, pos_sorted, neg_sorted
    raise PlacementError("no gadget placement found")


def _connector(start: Point, end_corner: CornerSpec, rho_c: float, strips) -> list[Point]:
    """Joints leading from ``start`` out to radius rho_c, around, and into A of ``end_corner``."""
    A = end_corner["A"]
    w_end = sub(A, scale(end_corner.heading, 3.0))
    th0 = math.atan2(start[1], start[0])
    th1 = math.atan2(w_end[1], w_end[0])
    delta = (th1 - th0 + math.pi) % (2 * math.pi) - math.pi
    steps = max(1, math.ceil(abs(delta) / CONNECTOR_STEP))
    joints = []
    for k in range(steps + 1):
        th = th0 + delta * k / steps
        p = None
        for nudge in range(0, 200):
            for sgn in ((1,) if nudge == 0 else (1, -1)):
                cand_th = th + sgn * nudge * math.radians(0.25)
                cand = (rho_c * math.cos(cand_th), rho_c * math.sin(cand_th))
                if _outside_strips([cand], strips):
                    p = cand
                    break
            if p is not None:
                break
        if p is None:
            raise PlacementError("connector joint cannot avoid the strips")
        joints.append(p)
    joints.append(w_end)
    return joints


# ------------------------------------------------------------------ building

def build_reduction(f: Formula, eps: float = 1.0) -> ReductionOutput:
    """Lay out the full construction for a (3,B2) formula."""
    report = validate_b2(f)
    if not report.ok:
        raise ValueError("formula is not (3,B2): " + "; ".join(report.violations))
    if not eps > 0:
        raise ValueError("eps must be positive")
    if report.trivial:
        raise ValueError("formula has no clauses")
    m = len(f.clauses)
    ring = build_clause_ring(m, 1.0)
    R = ring.radius
    pairs = {}
    for v in range(1, f.variable_count + 1):
        pairs[v] = (tuple(f.occurrences(v)), tuple(f.occurrences(-v)))
    all_strips = {}
    for v, (p, n) in pairs.items():
        all_strips[v] = [clause_strip(ring, *p), clause_strip(ring, *n)]

    placed: list[Point] = list(ring.points)   # S points so far, unit scale
    plans = []
    rho = 4.5 * R
    prev_end = None
    for v in range(1, f.variable_count + 1):
        strips = [s for w, ss in all_strips.items() if w != v for s in ss]
        own = {s.pair for s in all_strips[v]}
        strips = [s for s in strips if s.pair not in own]
        hull = convex_hull(placed)
        reach = max(norm(p) for p in placed)
        # Connector arcs run between the old material and the new gadget; their
        # chords sag by a factor cos(step), which the radius has to absorb.
        rho_c = (reach + RADIUS_GAP / 2) / math.cos(CONNECTOR_STEP)
        rho = max(4.5 * R, rho_c + RADIUS_GAP / 2)
        corners, pos_sorted, neg_sorted = _plan_gadget(ring, *pairs[v], strips, hull, rho)
        conn = []
        if prev_end is not None:
            every = [s for ss in all_strips.values() for s in ss]
            conn = _connector(prev_end, corners[0], rho_c, every)
            path = conn + [corners[0]["A"]]
            segs = [Segment(path[k], path[k + 1]) for k in range(len(path) - 1)]
            if not _clear_of_hull(segs, hull, HULL_MARGIN):
                raise PlacementError(f"connector into gadget x{v} touches the hull")
        plans.append((v, corners, pos_sorted, neg_sorted, conn))
        placed.extend(conn)
        for c in corners:
            placed.extend(c.points[n] for n in ("A", "E", "F", "G", "H", "J", "K", "L"))
        placed.extend(c.points[n] for c in corners for n in ("B", "C", "D"))
        prev_end = corners[0]["J"]
    return _assemble(f, eps, plans)


def _assemble(f: Formula, eps: float, plans) -> ReductionOutput:
    m = len(f.clauses)
    ring_unit = build_clause_ring(m, 1.0)
    ring = ClauseRing(ring_unit.radius * eps, tuple(scale(p, eps) for p in ring_unit.points), eps)
    points: list[Point] = list(ring.points)
    roles: list[Role] = [Role("clause", j) for j in range(m)]
    vertices: list[Point] = []
    gadgets = []

    def add_point(p, kind):
        points.append(p)
        roles.append(Role(kind))
        return len(points) - 1

    for v, unit_corners, pos_sorted, neg_sorted, conn in plans:
        corners = [make_alpha_corner((scale(c.origin, eps), c.heading), c.alpha, eps, c.bend)
                   for c in unit_corners]
        p0, v0 = len(points), len(vertices)
        exempt = []
        prefix = []
        if conn:
            exempt.append(len(vertices))  # segment from the previous J1 to the first joint
            for q in conn:
                q = scale(q, eps)
                vertices.append(q)
                prefix.append(add_point(q, "joint"))
        c1, c5 = corners[0], corners[-1]
        A1 = add_point(c1["A"], "joint")
        a = add_point(add(c1["A"], scale(_inner(c1.heading, c1.bend), eps)), "split")
        prefix += [A1, a]
        K = [add_point(c["K"], "corner-inner") for c in corners]
        L = [add_point(c["L"], "corner-inner") for c in corners]
        G = [add_point(c["G"], "corner-outer") for c in corners]
        H = [add_point(c["H"], "corner-outer") for c in corners]
        d = add_point(add(c5["E"], scale(_inner(c5.out_heading, c5.bend), eps)), "split")
        F5 = add_point(c5["F"], "joint")
        J1 = add_point(c1["J"], "joint")
        pos_ids = list(pos_sorted)
        neg_ids = list(neg_sorted)
        true_path = (K[0], *pos_ids, L[1], K[2], L[3], K[4])
        false_path = (L[0], K[1], L[2], K[3], *neg_ids, L[4])
        suffix = [d, F5]
        for i in range(4, -1, -1):
            suffix += [G[i], K[i], L[i], H[i]]
        suffix.append(J1)

        # forward path
        vertices.append(c1["A"])
        for i, c in enumerate(corners):
            seg_in = len(vertices)      # 1-based index of segment ending at B
            vertices += [c["B"], c["C"], c["D"]]
            if i in (1, 4):
                exempt.append(seg_in)
        vertices += [c5["E"], c5["F"]]
        for i in range(4, -1, -1):
            if i in (0, 3):
                exempt.append(len(vertices))  # return segment arriving at G of corner i
            vertices += [corners[i]["G"], corners[i]["H"]]
        vertices.append(c1["J"])
        gadgets.append(Gadget(v, tuple(pos_sorted), tuple(neg_sorted), tuple(corners), tuple(prefix),
                              true_path, false_path, tuple(suffix), tuple(exempt),
                              (p0, len(points)), (v0, len(vertices))))
    inst = Instance(vertices, points, eps, Variant.NONUNIQUE_ALL)
    return ReductionOutput(f, eps, inst, tuple(roles), ring, tuple(gadgets))


def witness_from_assignment(r: ReductionOutput, a: Assignment) -> tuple:
    """Per gadget: prefix, the TRUE or FALSE path, then the return path."""
    if len(a.values) != r.formula.variable_count:
        raise ValueError("assignment does not cover every variable")
    w = []
    for g in r.gadgets:
        w += g.prefix
        w += g.true_path if a.values[g.variable - 1] else g.false_path
        w += g.suffix
    return tuple(w)


# ---------------------------------------------------------------- validation

@dataclass
class ReductionReport:
    violations: list
    checked_assignment: Assignment | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_reduction(r: ReductionOutput, check_witness: bool = True) -> ReductionReport:
    """Re-check every placement rule of a finished construction."""
    eps = r.eps
    tol = 1e-9 * eps
    out: list[str] = []
    ring = r.ring
    m = ring.count
    if ring.radius < m * m * eps - tol:
        out.append(f"ring radius {ring.radius / eps:.3f} eps is below {m * m} eps")
    for i, p in enumerate(ring.points):
        if abs(norm(sub(p, ring.center)) - ring.radius) > tol * max(1.0, ring.radius):
            out.append(f"clause point {i} is off the ring")
    if m > 1:
        step = 2 * math.pi / m
        for i in range(m):
            p, q = ring.points[i], ring.points[(i + 1) % m]
            ang = math.atan2(cross2(p, q), dot(p, q)) % (2 * math.pi)
            if abs(ang - step) > 1e-9:
                out.append(f"clause points {i} and {(i + 1) % m} are not equally spaced")
    for (i, j), (k, l), s in ring.parallel_chord_separations():
        if s < CHORD_SEPARATION * eps - tol:
            out.append(f"parallel chords C{i}C{j} and C{k}C{l} only {s / eps:.3f} eps apart")
    for j in range(m):
        if r.instance.points[j] != ring.points[j] or r.roles[j] != Role("clause", j):
            out.append(f"clause point {j} does not match the ring")

    strips = {}
    for g in r.gadgets:
        strips[g.variable] = [clause_strip(ring, *sorted(g.pos_clauses)),
                              clause_strip(ring, *sorted(g.neg_clauses))]
    S = r.instance.points
    Pv = r.instance.curve.vertices
    for g in r.gadgets:
        own = {s.pair for s in strips[g.variable]}
        foreign = [s for w, ss in strips.items() if w != g.variable for s in ss if s.pair not in own]
        if len(g.corners) % 2 == 0:
            out.append(f"gadget x{g.variable} has an even number of corners")
        if len({c.bend for c in g.corners}) != 1:
            out.append(f"gadget x{g.variable} mixes bend directions")
        for ci, c in enumerate(g.corners, start=1):
            for msg in corner_violations(c):
                out.append(f"gadget x{g.variable} corner {ci}: {msg}")
            for name in CORNER_NAMES:
                if not _outside_strips([c[name]], foreign, tol):
                    out.append(f"gadget x{g.variable} corner {ci} point {name} lies in a foreign strip")
        lo, hi = g.point_range
        for idx in range(lo, hi):
            if r.roles[idx].kind == "joint" and not _outside_strips([S[idx]], foreign, tol):
                out.append(f"joint {idx} lies in a foreign strip")
        hull = convex_hull(S[:lo])
        v0, v1 = g.vertex_range
        first_seg = v0 if v0 > 0 else v0 + 1
        for sidx in range(first_seg, v1):
            if sidx in g.exempt_segments:
                continue
            seg = Segment(Pv[sidx - 1], Pv[sidx])
            dd = segment_polygon_distance(seg, hull)
            if dd <= eps:
                out.append(f"gadget x{g.variable}: segment {sidx} is {dd / eps:.3f} eps from the hull")
        for j in g.pos_clauses:
            if j not in g.true_path or j in g.false_path:
                out.append(f"gadget x{g.variable}: TRUE path does not own clause {j}")
        for j in g.neg_clauses:
            if j not in g.false_path or j in g.true_path:
                out.append(f"gadget x{g.variable}: FALSE path does not own clause {j}")

    checked = None
    if check_witness and r.formula.variable_count <= 24:
        checked = sat_bruteforce(r.formula)
        if checked is not None:
            w = witness_from_assignment(r, checked)
            rep = verify_witness(r.instance, w)
            if not rep.ok:
                out += [f"witness for {checked.to_string()}: {x}" for x in rep.violations]
            rep = verify_witness(r.instance.with_variant(Variant.UNIQUE_ALL), dedupe_witness(w))
            if not rep.ok:
                out += [f"deduplicated witness: {x}" for x in rep.violations]
    return ReductionReport(out, checked)


def with_ring_radius(r: ReductionOutput, radius: float) -> ReductionOutput:
    """Copy of ``r`` whose ring record claims a different radius (points rescaled)."""
    k = radius / r.ring.radius
    return replace(r, ring=replace(r.ring, radius=radius,
                                   points=tuple(scale(p, k) for p in r.ring.points)))
