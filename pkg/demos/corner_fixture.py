"""The right-angle corner: why the four problem variants differ.

P turns a corner; a and d sit at the ends, b and c are split points on the
two inner legs.  Visiting both b and c would need a revisit, so every
all-points variant fails while a subset curve through a, b, d succeeds.

Run:  python demos/corner_fixture.py [out.svg]
"""

import sys

from cpsm import Instance, Variant, solve_exact, verify_witness
from cpsm.frechet import frechet_distance
from cpsm.render import render_svg

curve = [(0, 5), (0, 2), (2, 2), (2, 0), (5, 0)]
points = [(1, 5), (0, 1), (1, 0), (5, 1)]
names = "abcd"

for variant in Variant:
    inst = Instance(curve, points, 1.0, variant)
    w = solve_exact(inst, max_len=8)
    label = "NO" if w is None else "YES via " + "".join(names[i] for i in w)
    print(f"{variant.value:17s} {label}")

inst = Instance(curve, points, 1.0, Variant.NONUNIQUE_SUBSET)
w = (0, 1, 3)
d = frechet_distance(inst.curve, inst.witness_curve(w), tol=1e-9)
print(f"witness abd: distance {d:.9f}, valid: {verify_witness(inst, w).ok}")
print("the distance equals eps exactly, so only a closed <= test accepts it")

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(render_svg(inst, w, cylinders=True))
    print("wrote", sys.argv[1])
