"""From a (3,B2) formula to a matching instance, and back to its truth table.

Every satisfying assignment yields a curve within eps of P that visits all
points; a falsifying one misses exactly the points of its false clauses.

Run:  python demos/sat_reduction.py [out_dir]
"""

import sys
from pathlib import Path

from cpsm import verify_witness
from cpsm.io import format_dimacs, write_reduction
from cpsm.reduction import build_reduction, validate_reduction, witness_from_assignment
from cpsm.render import render_svg
from cpsm.sat import all_assignments, example_formula, validate_b2

f = example_formula()
print(format_dimacs(f), end="")
print("B2 check:", "ok" if validate_b2(f).ok else validate_b2(f).violations)

r = build_reduction(f, eps=1.0)
print(f"instance: {r.instance.n} segments, {r.instance.k} points, ring radius {r.ring.radius:g}")
print("layout check:", validate_reduction(r, check_witness=False).violations or "clean")

for a in all_assignments(f.variable_count):
    rep = verify_witness(r.instance, witness_from_assignment(r, a))
    status = "covers all points" if rep.ok else "; ".join(rep.violations)
    print(f"  {a.to_string()}  sat={f.evaluate(a)!s:5}  {status}")

if len(sys.argv) > 1:
    out = Path(sys.argv[1])
    out.mkdir(parents=True, exist_ok=True)
    write_reduction(out / "phi.json", out / "phi_meta.json", r)
    w = witness_from_assignment(r, next(a for a in all_assignments(3) if f.evaluate(a)))
    (out / "phi.svg").write_text(render_svg(r.instance, w))
    print("wrote", out)
