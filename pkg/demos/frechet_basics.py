"""Deciding and computing the Fréchet distance between two polygonal curves.

Run:  python demos/frechet_basics.py
"""

from cpsm.frechet import decide_frechet, free_space_diagram, frechet_distance
from cpsm.geometry import PolyCurve

# A dog walks the zig-zag, its owner the straight line underneath.
walker = PolyCurve([(0, 0), (2, 2), (4, 0), (6, 2), (8, 0)])
owner = PolyCurve([(0, -1), (8, -1)])

d = frechet_distance(walker, owner)
print(f"leash length needed: {d:.6f}")
for eps in (2.5, d, 3.5):
    print(f"  eps = {eps:.6f}: {'YES' if decide_frechet(walker, owner, eps) else 'NO'}")

# The free-space diagram has one cell per pair of segments; a cell is
# "open" wherever the two positions are within eps of each other.
fsd = free_space_diagram(walker, owner, 3.0)
print(f"free-space diagram at eps = 3: {len(fsd.cells)} x {len(fsd.cells[0])} cells")

# Walking one curve backwards costs more than its Hausdorff distance suggests.
there = PolyCurve([(0, 0), (10, 0)])
back = PolyCurve([(0, 0), (10, 0), (5, 0), (10, 0)])
print(f"doubling back along a segment: {frechet_distance(there, back):.6f}")
