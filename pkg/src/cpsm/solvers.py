"""Curve/point-set matching: the restricted polynomial algorithm and exact search.

A witness is a tuple of indices into ``Instance.points``; it spells out the
vertices of the candidate curve Q in order.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .frechet import (DECISION_PAD, decide_frechet, decide_subcurve_vs_segment, propagate_row, reaches_end,
                      start_reach)
from .geometry import (ParamPoint, PolyCurve, as_point, curve_ball_windows, dist,
                       dist_point_segment, point_at, slack)

Witness = tuple


class Variant(enum.Enum):
    UNIQUE_ALL = "unique-all"
    NONUNIQUE_ALL = "nonunique-all"
    UNIQUE_SUBSET = "unique-subset"
    NONUNIQUE_SUBSET = "nonunique-subset"

    @property
    def unique(self) -> bool:
        return self in (Variant.UNIQUE_ALL, Variant.UNIQUE_SUBSET)

    @property
    def all_points(self) -> bool:
        return self in (Variant.UNIQUE_ALL, Variant.NONUNIQUE_ALL)


@dataclass(frozen=True)
class Instance:
    curve: PolyCurve
    points: tuple
    epsilon: float
    variant: Variant = Variant.NONUNIQUE_ALL

    def __init__(self, curve, points, epsilon, variant=Variant.NONUNIQUE_ALL):
        curve = curve if isinstance(curve, PolyCurve) else PolyCurve(curve)
        pts = tuple(as_point(p) for p in points)
        if not epsilon > 0:
            raise ValueError("epsilon must be positive")
        if any(len(p) != curve.dim for p in pts):
            raise ValueError("point dimension differs from curve dimension")
        if len(set(pts)) != len(pts):
            raise ValueError("point set contains duplicates")
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "epsilon", float(epsilon))
        object.__setattr__(self, "variant", Variant(variant))

    @property
    def n(self) -> int:
        return self.curve.n_segments

    @property
    def k(self) -> int:
        return len(self.points)

    def with_variant(self, variant: Variant) -> "Instance":
        return Instance(self.curve, self.points, self.epsilon, variant)

    def witness_curve(self, w: Sequence[int]) -> PolyCurve:
        return PolyCurve.from_points([self.points[i] for i in w])


class RestrictionError(ValueError):
    """The instance violates the one-window-per-point restriction."""

    def __init__(self, report: "RestrictionReport"):
        super().__init__(report.summary())
        self.report = report


@dataclass
class RestrictionReport:
    ok: bool
    window_counts: dict
    multi_window: list
    uncovered: list

    def summary(self) -> str:
        parts = []
        for s in self.multi_window:
            parts.append(f"point {s} meets the curve in {self.window_counts[s]} windows")
        for s in self.uncovered:
            parts.append(f"point {s} is in no cylinder")
        return "; ".join(parts) if parts else "restriction holds"


@dataclass
class CylinderIndex:
    """Cylinder membership S_0..S_{n+1} and the extreme windows l(s), r(s)."""

    instance: Instance
    S: list
    left: dict
    right: dict
    windows: dict = field(repr=False)

    @property
    def n(self) -> int:
        return self.instance.n

    def l(self, s: int) -> ParamPoint:
        return self.left[s]

    def r(self, s: int) -> ParamPoint:
        return self.right[s]


def build_cylinder_index(inst: Instance) -> CylinderIndex:
    P, eps = inst.curve, inst.epsilon
    tol = eps + slack(eps)
    n = P.n_segments
    S: list = [[] for _ in range(n + 2)]
    left, right, windows = {}, {}, {}
    for s, p in enumerate(inst.points):
        if dist(p, P.vertices[0]) <= tol:
            S[0].append(s)
        if dist(p, P.vertices[-1]) <= tol:
            S[n + 1].append(s)
        for i, seg in enumerate(P.segments(), start=1):
            if dist_point_segment(p, seg)[0] <= tol:
                S[i].append(s)
        w = curve_ball_windows(P, p, eps)
        windows[s] = w
        if w:
            left[s], right[s] = w[0].lo, w[-1].hi
    return CylinderIndex(inst, S, left, right, windows)


def check_restriction(inst: Instance, idx: CylinderIndex | None = None) -> RestrictionReport:
    idx = idx or build_cylinder_index(inst)
    counts = {s: len(w) for s, w in idx.windows.items()}
    multi = [s for s, c in counts.items() if c > 1]
    uncovered = [s for s, c in counts.items() if c == 0]
    return RestrictionReport(not multi and not uncovered, counts, multi, uncovered)


def connectable(idx: CylinderIndex, i: int, j: int, s: int, t: int) -> bool:
    """Whether segments i < j can be joined by a hop from point s to point t."""
    if not 1 <= i < j <= idx.n:
        raise ValueError(f"need 1 <= i < j <= n, got {i}, {j}")
    Si, Sj = set(idx.S[i]), set(idx.S[j])
    if s not in Si or t not in Sj:
        raise ValueError(f"point {s} not in S_{i} or point {t} not in S_{j}")
    inst = idx.instance
    for k in range(i + 1, j):
        if set(idx.S[k]) - Si - Sj:
            return False
    rs, lt = idx.r(s), idx.l(t)
    a, b = inst.points[s], inst.points[t]
    if rs <= lt:
        if not decide_subcurve_vs_segment(inst.curve, rs, lt, a, b, inst.epsilon):
            return False
    else:
        # Windows overlap: treat P' as the single point where both are close.
        p_star = max(idx.l(s), lt)
        if p_star > min(rs, idx.r(t)):
            return False
        c = point_at(inst.curve, p_star)
        tol = inst.epsilon + DECISION_PAD * slack(inst.epsilon)
        if dist(c, a) > tol or dist(c, b) > tol:
            return False
    for v in Si | Sj:
        if not (idx.l(v) <= rs or lt <= idx.r(v)):
            return False
    return True


@dataclass
class ConnectivityGraph:
    n: int
    edges: dict  # (i, j) -> (s, t)

    def successors(self, i: int) -> list:
        return sorted(j for (a, j) in self.edges if a == i)

    def shortest_path(self, src: int, dst: int) -> list | None:
        prev = {src: None}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if u == dst:
                path = []
                while u is not None:
                    path.append(u)
                    u = prev[u]
                return path[::-1]
            for v in self.successors(u):
                if v not in prev:
                    prev[v] = u
                    queue.append(v)
        return None


def build_graph(idx: CylinderIndex) -> ConnectivityGraph:
    edges = {}
    for i in range(1, idx.n + 1):
        for j in range(i + 1, idx.n + 1):
            for s in sorted(idx.S[i]):
                hit = next((t for t in sorted(idx.S[j]) if connectable(idx, i, j, s, t)), None)
                if hit is not None:
                    edges[(i, j)] = (s, hit)
                    break
    return ConnectivityGraph(idx.n, edges)


def _projection(inst: Instance, seg_index: int, v: int) -> float:
    return dist_point_segment(inst.points[v], inst.curve.segment(seg_index))[1]


def restricted_sequence(idx: CylinderIndex, path: Sequence[int],
                        graph: ConnectivityGraph) -> tuple[list, list]:
    """Build Q along a graph path, with the position on P matched to each vertex."""
    inst = idx.instance
    m = len(path)
    t_pts = [min(idx.S[0])] + [graph.edges[(path[i], path[i + 1])][1] for i in range(m - 1)]
    s_pts = [graph.edges[(path[i], path[i + 1])][0] for i in range(m - 1)] + [min(idx.S[-1])]
    seq: list = []
    matched: list = []
    for a_i, ti, si in zip(path, t_pts, s_pts):
        lt, rs = idx.l(ti), idx.r(si)
        inner = [v for v in idx.S[a_i]
                 if lt <= idx.r(v) and idx.l(v) <= rs and v not in (si, ti)]
        inner.sort(key=lambda v: (_projection(inst, a_i, v), v))
        visits = [(ti, lt)]
        for v in inner:
            p = inst.curve.normalize(ParamPoint(a_i, _projection(inst, a_i, v)))
            visits.append((v, min(max(p, lt), rs) if lt <= rs else p))
        visits.append((si, rs))
        for v, p in visits:
            if seq and seq[-1] == v:
                continue
            seq.append(v)
            matched.append(p)
    return seq, matched


def _add_detours(idx: CylinderIndex, seq: list, matched: list) -> tuple[list, list]:
    """Visit skipped points as out-and-back detours from an already placed vertex.

    While Q waits at vertex u, P may move on through u's window up to the
    position matched to the next vertex.  At any such position x that also
    lies in v's window, Q can run u -> v -> u with P held at x: both ends are
    within eps of P(x), and so is the segment between them.
    """
    missing = set(range(idx.instance.k)) - set(seq)
    if not missing:
        return seq, matched
    out, pos = [], []
    for m, (u, p) in enumerate(zip(seq, matched)):
        hi = min(idx.r(u), matched[m + 1]) if m + 1 < len(seq) else idx.r(u)
        found = []
        for v in missing:
            x = max(p, idx.l(v))
            if x <= min(hi, idx.r(v)):
                found.append((x, v))
        out.append(u)
        pos.append(p)
        for x, v in sorted(found):
            out += [v, u]
            pos += [x, x]
            missing.discard(v)
    return out, pos


def _insert_missing(inst: Instance, seq: list) -> list:
    """Last-resort coverage repair: splice each unvisited point in where Q still fits.

    Tries a detour ``u, v, u`` after every vertex, then a plain insertion
    between neighbours; each candidate is checked with the decision procedure.
    """
    P, eps = inst.curve, inst.epsilon
    for v in range(inst.k):
        if v in seq:
            continue
        for m in range(len(seq)):
            options = ([seq[: m + 1] + [v] + seq[m:]]
                       + ([seq[: m + 1] + [v] + seq[m + 1:]] if m + 1 < len(seq) else []))
            ok = next((c for c in options if decide_frechet(P, inst.witness_curve(c), eps)), None)
            if ok is not None:
                seq = ok
                break
    return seq


def solve_restricted(inst: Instance) -> Witness | None:
    """Polynomial algorithm for restricted non-unique all-points instances."""
    if inst.variant is not Variant.NONUNIQUE_ALL:
        raise ValueError(f"restricted solver handles nonunique-all only, not {inst.variant.value}")
    idx = build_cylinder_index(inst)
    report = check_restriction(inst, idx)
    if not report.ok:
        raise RestrictionError(report)
    if not idx.S[0] or not idx.S[-1]:
        return None  # Q cannot start or end within eps of P's endpoints
    graph = build_graph(idx)
    path = graph.shortest_path(1, idx.n)
    if path is None:
        return None
    seq, matched = restricted_sequence(idx, path, graph)
    seq, _ = _add_detours(idx, seq, matched)
    return tuple(_insert_missing(inst, seq))


@dataclass
class SearchResult:
    witness: Witness | None
    max_len: int
    exact: bool  # False when "no witness" only holds up to max_len
    states: int


def _key(reach) -> tuple:
    return tuple(None if r is None else (round(r[0], 12), round(r[1], 12)) for r in reach)


def exact_search(inst: Instance, max_len: int | None = None) -> SearchResult:
    """Breadth-first search over vertex sequences of Q with free-space pruning.

    A state is (last vertex, visited set, reachable positions on P).  BFS order
    means a state is first seen at its shortest length, so a global visited
    set keeps the search exact up to ``max_len``.
    """
    P, eps, pts, var = inst.curve, inst.epsilon, inst.points, inst.variant
    k = len(pts)
    if max_len is None:
        max_len = k if var.unique else 2 * (inst.n + k)
    if var.all_points and max_len < k:
        raise ValueError("max_len must be at least the number of points")
    full = (1 << k) - 1
    track = var.unique or var.all_points

    def done(mask, reach):
        return reaches_end(reach) and (not var.all_points or mask == full)

    seen = set()
    frontier = []
    for s in range(k):
        reach = start_reach(P, pts[s], eps)
        if reach[0] is None:
            continue
        mask = (1 << s) if track else 0
        key = (s, mask, _key(reach))
        if key in seen:
            continue
        seen.add(key)
        node = (s, mask, reach, (s,))
        if done(mask, reach):
            return SearchResult((s,), max_len, True, len(seen))
        frontier.append(node)
    length = 1
    while frontier and length < max_len:
        nxt = []
        for s, mask, reach, seq in frontier:
            for t in range(k):
                if t == s or (var.unique and mask >> t & 1):
                    continue
                new = propagate_row(P, reach, pts[s], pts[t], eps)
                if all(r is None for r in new):
                    continue
                nmask = mask | (1 << t) if track else 0
                key = (t, nmask, _key(new))
                if key in seen:
                    continue
                seen.add(key)
                w = seq + (t,)
                if done(nmask, new):
                    return SearchResult(w, max_len, True, len(seen))
                nxt.append((t, nmask, new, w))
        frontier = nxt
        length += 1
    exact = var.unique or not frontier
    return SearchResult(None, max_len, exact, len(seen))


def solve_exact(inst: Instance, max_len: int | None = None) -> Witness | None:
    return exact_search(inst, max_len).witness


def decide_subset_nonunique(inst: Instance) -> Witness | None:
    """Polynomial decision for the non-unique subset variant.

    For a fixed last vertex the reachable part of each P segment is the free
    window cut at some lower bound, so one label per point (the union over all
    ways to arrive there) suffices; labels only ever grow.
    """
    if inst.variant is not Variant.NONUNIQUE_SUBSET:
        raise ValueError(f"subset solver handles nonunique-subset only, not {inst.variant.value}")
    P, eps, pts = inst.curve, inst.epsilon, inst.points
    k = len(pts)
    best: list = [[None] * P.n_segments for _ in range(k)]
    nodes: list = []  # (point, reach, parent node id)
    queue: deque = deque()

    def improves(s, reach):
        changed = False
        for i, r in enumerate(reach):
            if r is None:
                continue
            b = best[s][i]
            if b is None or r[0] < b[0] - 1e-15:
                best[s][i] = r if b is None else (r[0], max(r[1], b[1]))
                changed = True
        return changed

    for s in range(k):
        reach = start_reach(P, pts[s], eps)
        if reach[0] is not None and improves(s, reach):
            nodes.append((s, reach, None))
            queue.append(len(nodes) - 1)
    while queue:
        nid = queue.popleft()
        s, reach, _ = nodes[nid]
        if reaches_end(reach):
            seq = []
            while nid is not None:
                seq.append(nodes[nid][0])
                nid = nodes[nid][2]
            return tuple(seq[::-1])
        for t in range(k):
            if t == s:
                continue
            new = propagate_row(P, reach, pts[s], pts[t], eps)
            if any(r is not None for r in new) and improves(t, new):
                nodes.append((t, new, nid))
                queue.append(len(nodes) - 1)
    return None


@dataclass
class VerifyReport:
    ok: bool
    violations: list

    def __bool__(self):
        return self.ok


def verify_witness(inst: Instance, w: Sequence[int]) -> VerifyReport:
    issues = []
    w = list(w)
    if not w:
        return VerifyReport(False, ["empty witness"])
    bad = [i for i in w if not 0 <= i < inst.k]
    if bad:
        return VerifyReport(False, [f"index {i} out of range" for i in bad])
    if inst.variant.unique:
        seen = set()
        for i in w:
            if i in seen:
                issues.append(f"repeated point {i}")
            seen.add(i)
    if inst.variant.all_points:
        for i in sorted(set(range(inst.k)) - set(w)):
            issues.append(f"uncovered point {i}")
    if not decide_frechet(inst.curve, inst.witness_curve(w), inst.epsilon):
        issues.append(f"Fréchet distance exceeds {inst.epsilon}")
    return VerifyReport(not issues, issues)


def dedupe_witness(w: Sequence[int]) -> Witness:
    seen = set()
    out = []
    for i in w:
        if i not in seen:
            seen.add(i)
            out.append(i)
    return tuple(out)
