"""Curve/point-set matching: the polynomial algorithm against brute force.

Run:  python demos/restricted_matching.py [count]
Set CPSM_SEED to change the random instances.
"""

import sys
import time

from cpsm import Instance, Variant, check_restriction, solve_exact, solve_restricted, verify_witness
from cpsm.generate import make_rng, random_restricted_instance

# A hand-made case first: four points scattered along a straight road.
road = Instance([(0, 0), (10, 0)], [(0, 0.5), (4, -0.5), (7, 0.5), (10, 0)], 1.0, Variant.NONUNIQUE_ALL)
w = solve_restricted(road)
print("road witness:", w, "valid:", verify_witness(road, w).ok)

# A point near both legs of a U-turn sees the curve twice, which the
# polynomial algorithm cannot handle.
u_turn = Instance([(0, 0), (10, 0), (10, 1.5), (0, 1.5)], [(0, 0), (5, 0.75), (0, 1.5)], 1.0)
print("u-turn restriction:", check_restriction(u_turn).summary())

count = int(sys.argv[1]) if len(sys.argv) > 1 else 200
rng = make_rng()
agree = yes = 0
t_fast = t_slow = 0.0
for _ in range(count):
    inst = random_restricted_instance(rng)
    t0 = time.perf_counter()
    fast = solve_restricted(inst)
    t1 = time.perf_counter()
    slow = solve_exact(inst, max_len=2 * (inst.n + inst.k))
    t2 = time.perf_counter()
    t_fast += t1 - t0
    t_slow += t2 - t1
    agree += (fast is None) == (slow is None)
    yes += fast is not None
print(f"{agree}/{count} random instances agree ({yes} YES); "
      f"restricted {t_fast:.2f} s, exhaustive {t_slow:.2f} s")
