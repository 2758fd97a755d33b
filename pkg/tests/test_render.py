import re
from pathlib import Path

import pytest

from cpsm import Instance
from cpsm.io import read_instance
from cpsm.render import render_svg

DATA = Path(__file__).parent / "data"


def test_corner_picture_elements():
    inst = read_instance(DATA / "corner_subset.json")
    svg = render_svg(inst, witness=[0, 1, 3])
    assert svg.count("<circle") == 4
    assert svg.count('class="curve"') == 1
    assert svg.count('class="witness"') == 1 and "stroke-dasharray" in svg


def test_cylinders_are_dotted_outlines():
    inst = read_instance(DATA / "corner_subset.json")
    svg = render_svg(inst, cylinders=True)
    assert svg.count("<path") == inst.n
    assert 'stroke-dasharray="1,3"' in svg


def test_render_is_deterministic():
    inst = read_instance(DATA / "phi_instance.json")
    assert render_svg(inst, cylinders=True) == render_svg(inst, cylinders=True)


def test_reduction_picture_has_clause_ring():
    inst = read_instance(DATA / "phi_instance.json")
    svg = render_svg(inst)
    assert svg.count("<circle") == inst.k
    circles = [(float(x), float(y)) for x, y in re.findall(r'<circle cx="([-\d.]+)" cy="([-\d.]+)"', svg)]
    ring = circles[:4]
    cx = sum(p[0] for p in ring) / 4
    cy = sum(p[1] for p in ring) / 4
    radii = [((p[0] - cx) ** 2 + (p[1] - cy) ** 2) ** 0.5 for p in ring]
    assert max(radii) - min(radii) < 0.01


def test_render_needs_2d():
    with pytest.raises(ValueError):
        render_svg(Instance([(0, 0, 0), (1, 1, 1)], [(0, 0, 0)], 1.0))
