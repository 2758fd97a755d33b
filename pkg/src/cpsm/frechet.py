"""Continuous Fréchet decision via the free-space diagram, plus bisection distance.

The diagram is laid out with curve ``P`` on the horizontal axis and ``Q`` on
the vertical one.  Reachability is propagated one row (one segment of ``Q``)
at a time; the same row step drives the exact CPSM search in ``solvers``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .geometry import (ParamPoint, PolyCurve, Segment, dist, point_at, segment_ball_window,
                       slack)

Interval = Optional[tuple]  # (lo, hi) within [0, 1], or None when empty

# Decisions run at a wider pad than window/membership tests, so positions
# derived from windows (which sit exactly on the padded radius) still pass.
DECISION_PAD = 2.0


def _as_curve(c) -> PolyCurve:
    return c if isinstance(c, PolyCurve) else PolyCurve.from_points(list(c))


@dataclass(frozen=True)
class FreeSpaceCell:
    bottom: Interval
    top: Interval
    left: Interval
    right: Interval


@dataclass
class FreeSpaceDiagram:
    """Free intervals of every cell edge and the reachable parts of each row top."""

    cells: list  # cells[j][i]: P segment i, Q segment j (0-based)
    reach: list  # reach[j]: per-P-segment reachable interval on the bottom of row j
    accepted: bool


def start_reach(P: PolyCurve, q, eps: float, pad: float | None = None) -> list:
    """Positions p such that all of P up to p stays within eps of the point q."""
    out: list = [None] * P.n_segments
    for i, seg in enumerate(P.segments()):
        w = segment_ball_window(seg, q, eps, pad)
        if w is None or w[0] > 0.0:
            break
        out[i] = (0.0, w[1])
        if w[1] < 1.0:
            break
    return out


def propagate_row(P: PolyCurve, reach: Sequence, q0, q1, eps: float,
                  pad: float | None = None) -> list:
    """Push reachability from the row bottom (Q at q0) to its top (Q at q1).

    ``reach[i]`` is the reachable part of P segment ``i`` (0-based) while Q sits
    at ``q0``.  Each free-space cell is convex, so any reachable point connects
    monotonically to every free point above and to the right of it.
    """
    n = P.n_segments
    qseg = Segment(q0, q1)
    verts = P.vertices
    out: list = [None] * n
    left = None
    if reach[0] is not None and reach[0][0] <= 0.0:
        w = segment_ball_window(qseg, verts[0], eps, pad)
        if w is not None and w[0] <= 0.0:
            left = w
    for i in range(n):
        bottom = reach[i]
        if bottom is None and left is None:
            continue
        top_free = segment_ball_window(Segment(verts[i], verts[i + 1]), q1, eps, pad)
        if top_free is not None:
            x0 = 0.0 if left is not None else bottom[0]
            lo = max(top_free[0], x0)
            if lo <= top_free[1]:
                out[i] = (lo, top_free[1])
        right_free = segment_ball_window(qseg, verts[i + 1], eps, pad)
        nxt = None
        if right_free is not None:
            if bottom is not None:
                nxt = right_free
            else:
                lo = max(right_free[0], left[0])
                if lo <= right_free[1]:
                    nxt = (lo, right_free[1])
        left = nxt
    return out


def reaches_end(reach: Sequence) -> bool:
    last = reach[-1]
    return last is not None and last[1] >= 1.0


def free_space_diagram(P, Q, eps: float) -> FreeSpaceDiagram:
    P, Q = _as_curve(P), _as_curve(Q)
    if P.dim != Q.dim:
        raise ValueError(f"dimension mismatch: {P.dim} vs {Q.dim}")
    if eps < 0:
        raise ValueError("eps must be non-negative")
    pad = DECISION_PAD * slack(eps)
    cells = []
    for j, qs in enumerate(Q.segments()):
        row = []
        for i, ps in enumerate(P.segments()):
            row.append(FreeSpaceCell(
                bottom=segment_ball_window(ps, qs.start, eps, pad),
                top=segment_ball_window(ps, qs.end, eps, pad),
                left=segment_ball_window(qs, ps.start, eps, pad),
                right=segment_ball_window(qs, ps.end, eps, pad),
            ))
        cells.append(row)
    tol = eps + pad
    reach = [start_reach(P, Q.vertices[0], eps, pad)]
    ok = dist(P.vertices[0], Q.vertices[0]) <= tol and dist(P.vertices[-1], Q.vertices[-1]) <= tol
    if ok:
        for j in range(Q.n_segments):
            reach.append(propagate_row(P, reach[-1], Q.vertices[j], Q.vertices[j + 1], eps, pad))
        ok = reaches_end(reach[-1])
    return FreeSpaceDiagram(cells=cells, reach=reach, accepted=ok)


def decide_frechet(P, Q, eps: float) -> bool:
    """True iff the Fréchet distance between P and Q is at most eps."""
    return free_space_diagram(P, Q, eps).accepted


def frechet_distance(P, Q, tol: float = 1e-6) -> float:
    """Fréchet distance to within ``tol``, by bisection over the decision procedure."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    P, Q = _as_curve(P), _as_curve(Q)
    lo = max(dist(P.vertices[0], Q.vertices[0]), dist(P.vertices[-1], Q.vertices[-1]))
    hi = max(dist(p, q) for p in P.vertices for q in Q.vertices)
    if decide_frechet(P, Q, lo):
        return lo
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if decide_frechet(P, Q, mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def decide_subcurve_vs_segment(P: PolyCurve, frm: ParamPoint, to: ParamPoint, a, b,
                               eps: float) -> bool:
    """Fréchet decision between the part of P from ``frm`` to ``to`` and segment ab."""
    if P.normalize(to) < P.normalize(frm):
        raise ValueError(f"{frm} comes after {to}")
    if P.normalize(frm) == P.normalize(to):
        sub = PolyCurve.from_points([point_at(P, frm)])
    else:
        sub = P.subcurve(frm, to)
    return decide_frechet(sub, PolyCurve([a, b]), eps)
