"""Deterministic SVG pictures of instances, witnesses and eps-cylinders."""

from __future__ import annotations

from typing import Sequence

from .geometry import add, left_normal, scale, sub, unit
from .solvers import Instance

CANVAS = 800.0
MARGIN = 40.0


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(inst: Instance, witness: Sequence[int] | None = None, cylinders: bool = False,
               point_radius: float = 3.0) -> str:
    """P solid, S as filled circles, the witness dashed, cylinders dotted.

    The drawing is fitted into a fixed canvas with a fixed margin.  Output
    depends only on the arguments, so equal inputs give identical bytes.
    """
    if inst.curve.dim != 2:
        raise ValueError("only 2-D instances can be rendered")
    eps = inst.epsilon
    pts = list(inst.curve.vertices) + list(inst.points)
    pad = eps if cylinders else 0.0
    xmin = min(p[0] for p in pts) - pad
    xmax = max(p[0] for p in pts) + pad
    ymin = min(p[1] for p in pts) - pad
    ymax = max(p[1] for p in pts) + pad
    span = max(xmax - xmin, ymax - ymin, 1e-12)
    k = (CANVAS - 2 * MARGIN) / span
    width = (xmax - xmin) * k + 2 * MARGIN
    height = (ymax - ymin) * k + 2 * MARGIN

    def xy(p):
        # SVG's y axis points down.
        return _fmt(MARGIN + (p[0] - xmin) * k), _fmt(MARGIN + (ymax - p[1]) * k)

    def poly(vs):
        return " ".join(",".join(xy(p)) for p in vs)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if cylinders:
        r = _fmt(eps * k)
        out.append('<g class="cylinders" fill="none" stroke="#888888" stroke-width="1" '
                   'stroke-dasharray="1,3">')
        for a, b in zip(inst.curve.vertices, inst.curve.vertices[1:]):
            if a == b:
                cx, cy = xy(a)
                out.append(f'<circle cx="{cx}" cy="{cy}" r="{r}"/>')
                continue
            n = scale(left_normal(unit(sub(b, a))), eps)
            a1, b1 = add(a, n), add(b, n)
            a2, b2 = sub(a, n), sub(b, n)
            d = (f"M {' '.join(xy(a1))} L {' '.join(xy(b1))} "
                 f"A {r} {r} 0 0 1 {' '.join(xy(b2))} L {' '.join(xy(a2))} "
                 f"A {r} {r} 0 0 1 {' '.join(xy(a1))} Z")
            out.append(f'<path d="{d}"/>')
        out.append("</g>")
    out.append(f'<polyline class="curve" points="{poly(inst.curve.vertices)}" fill="none" '
               'stroke="black" stroke-width="1.5"/>')
    if witness:
        out.append(f'<polyline class="witness" points="{poly([inst.points[i] for i in witness])}" '
                   'fill="none" stroke="#1f5fbf" stroke-width="1.5" stroke-dasharray="6,4"/>')
    out.append('<g class="points" fill="#c0392b">')
    for p in inst.points:
        cx, cy = xy(p)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{_fmt(point_radius)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
