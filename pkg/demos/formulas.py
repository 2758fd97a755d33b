"""Random (3,B2) formulas: every literal twice, no two clauses sharing two literals.

Such formulas are always satisfiable, which this script spot-checks.

Run:  python demos/formulas.py [count]
"""

import sys

from cpsm.generate import make_rng
from cpsm.sat import Formula, example_formula, random_b2_formula, sat_bruteforce, validate_b2

count = int(sys.argv[1]) if len(sys.argv) > 1 else 50
rng = make_rng()
for nvars in (3, 6, 9, 12):
    sat = sum(sat_bruteforce(random_b2_formula(rng, nvars)) is not None for _ in range(count))
    print(f"{nvars:2d} variables, {4 * nvars // 3:2d} clauses: {sat}/{count} satisfiable")

f = example_formula()
broken = Formula(3, [f.clauses[0], (-1, 2, 3)] + list(f.clauses[2:]))
print("flipping one literal:", "; ".join(validate_b2(broken).violations))
