"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line (shown in the terminal summary)
before asserting, so a failing run still lists every criterion.
"""

import math
import random
import time
from pathlib import Path

from cli_matrix import run_matrix
from conftest import CORNER_CURVE, CORNER_POINTS, record_acceptance
from cpsm import Instance, Variant, dedupe_witness, verify_witness
from cpsm.frechet import decide_frechet, frechet_distance
from cpsm.generate import make_rng, random_restricted_instance
from cpsm.geometry import PolyCurve, dist
from cpsm.io import (read_curve, read_formula, read_instance, read_reduction, read_witness,
                     write_curve, write_formula, write_instance, write_reduction, write_witness)
from cpsm.reduction import build_reduction, corner_violations, make_alpha_corner, validate_reduction, \
    witness_from_assignment
from cpsm.render import render_svg
from cpsm.sat import Formula, all_assignments, example_formula, random_b2_formula, sat_bruteforce, validate_b2
from cpsm.solvers import solve_exact, solve_restricted

DATA = Path(__file__).parent / "data"
TOL = 1e-6


def _analytic_cases():
    """(P, Q, exact distance) triples with known answers."""
    rng = random.Random(2024)
    cases = []
    for n in (1, 2, 3, 5, 8, 13):
        pts = [(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(n + 1)]
        cases.append((pts, pts, 0.0))
    for _ in range(8):
        pts = [(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(rng.randint(2, 6))]
        v = (rng.uniform(-3, 3), rng.uniform(-3, 3))
        cases.append((pts, [(x + v[0], y + v[1]) for x, y in pts], math.hypot(*v)))
    # Two segments: the distance is the larger endpoint gap.
    for _ in range(10):
        a, b = (rng.uniform(-10, 10), rng.uniform(-10, 10)), (rng.uniform(-10, 10), rng.uniform(-10, 10))
        c = (a[0] + rng.uniform(-2, 2), a[1] + rng.uniform(-2, 2))
        d = (b[0] + rng.uniform(-2, 2), b[1] + rng.uniform(-2, 2))
        cases.append(([a, b], [c, d], max(dist(a, c), dist(b, d))))
    return cases


def test_criterion_1_frechet_analytics():
    start = time.perf_counter()
    cases = _analytic_cases()
    bad = []
    for k, (p, q, want) in enumerate(cases):
        P, Q = PolyCurve.from_points(p), PolyCurve.from_points(q)
        got = frechet_distance(P, Q, tol=TOL / 10)
        if abs(got - want) > TOL or not decide_frechet(P, Q, want):
            bad.append(k)
        if want > TOL and decide_frechet(P, Q, want - TOL):
            bad.append(k)
    elapsed = time.perf_counter() - start
    ok = len(cases) >= 20 and not bad and elapsed < 5
    record_acceptance(1, ok, f"{len(cases)} analytic cases, {len(bad)} off by more than {TOL:g}, "
                             f"{elapsed:.2f} s (limit 5 s)")
    assert ok, bad


def test_criterion_2_restricted_matches_exact():
    start = time.perf_counter()
    rng = make_rng(20240)
    count, disagree, unverified, yes = 1000, [], [], 0
    for k in range(count):
        inst = random_restricted_instance(rng)
        w = solve_restricted(inst)
        oracle = solve_exact(inst, max_len=2 * (inst.n + inst.k))
        if (w is None) != (oracle is None):
            disagree.append(k)
        if w is not None:
            yes += 1
            if not verify_witness(inst, w).ok:
                unverified.append(k)
    elapsed = time.perf_counter() - start
    ok = not disagree and not unverified and elapsed < 120
    record_acceptance(2, ok, f"{count} restricted instances ({yes} YES), {len(disagree)} disagreements, "
                             f"{len(unverified)} unverified witnesses, {elapsed:.1f} s (limit 120 s)")
    assert ok, (disagree, unverified)


def test_criterion_3_corner_fixture():
    def inst(variant):
        return Instance(CORNER_CURVE, CORNER_POINTS, 1.0, variant)

    unique_all = solve_exact(inst(Variant.UNIQUE_ALL))
    nonunique_all = solve_exact(inst(Variant.NONUNIQUE_ALL), max_len=2 * (4 + 4))
    subset = solve_exact(inst(Variant.NONUNIQUE_SUBSET))
    P = PolyCurve(CORNER_CURVE)
    confirmed = tight = False
    if subset is not None:
        Q = PolyCurve.from_points([CORNER_POINTS[i] for i in subset])
        confirmed = decide_frechet(P, Q, 1.0)
        # The witness touches eps exactly, so a strict < test would say NO.
        tight = abs(frechet_distance(P, Q, tol=1e-9) - 1.0) < TOL
    ok = (unique_all is None and nonunique_all is None and subset in {(0, 1, 3), (0, 2, 3)}
          and confirmed and tight)
    record_acceptance(3, ok, f"unique-all {'NO' if unique_all is None else 'YES'}, nonunique-all "
                             f"{'NO' if nonunique_all is None else 'YES'}, nonunique-subset witness {subset}, "
                             f"closed-eps check {'YES' if confirmed else 'NO'}, distance exactly eps: {tight}")
    assert ok


def test_criterion_4_corner_invariants():
    start = time.perf_counter()
    failures = []
    for alpha in (math.pi / 8, math.pi / 4, math.pi / 3, math.pi / 2):
        for eps in (0.5, 1.0, 3.0):
            for bend in (1, -1):
                c = make_alpha_corner(((3.0, -2.0), (0.6, -0.8)), alpha, eps, bend)
                failures += [(alpha, eps, bend, v) for v in corner_violations(c)]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 1
    record_acceptance(4, ok, f"24 corners (4 angles x 3 eps x 2 bends), {len(failures)} violations, "
                             f"{elapsed * 1000:.0f} ms (limit 1 s)")
    assert ok, failures


def test_criterion_5_reduction_end_to_end():
    start = time.perf_counter()
    f = example_formula()
    r = build_reduction(f, 1.0)
    problems = list(validate_reduction(r).violations)
    ring = r.ring
    if ring.radius != 16 * r.eps:
        problems.append(f"ring radius {ring.radius}")
    radii = [dist(p, ring.center) for p in ring.points]
    gaps = [dist(ring.points[i], ring.points[(i + 1) % 4]) for i in range(4)]
    if len(ring.points) != 4 or max(radii) - min(radii) > 1e-9 or max(gaps) - min(gaps) > 1e-9:
        problems.append("ring points not equally spaced")
    satisfying = [a for a in all_assignments(f.variable_count) if f.evaluate(a)]
    if sat_bruteforce(f) not in satisfying:
        problems.append("brute force answer is not satisfying")
    for a in satisfying:
        w = witness_from_assignment(r, a)
        if not verify_witness(r.instance, w).ok:
            problems.append(f"witness for {a.to_string()} fails")
        if not verify_witness(r.instance, dedupe_witness(w)).ok:
            problems.append(f"deduplicated witness for {a.to_string()} fails")
    exact_misses = 0
    for a in all_assignments(f.variable_count):
        if f.evaluate(a):
            continue
        rep = verify_witness(r.instance, witness_from_assignment(r, a))
        want = sorted(f"uncovered point {j}" for j in f.falsified(a))
        if sorted(rep.violations) == want:
            exact_misses += 1
    if not exact_misses:
        problems.append("no falsifying witness misses exactly its clauses")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 60
    record_acceptance(5, ok, f"{len(satisfying)} satisfying witnesses checked, {exact_misses} falsifying "
                             f"witnesses miss exactly their clauses, {len(problems)} problems, "
                             f"{elapsed:.1f} s (limit 60 s)")
    assert ok, problems


def test_criterion_6_b2_validator():
    start = time.perf_counter()
    f = example_formula()
    accepts = validate_b2(f).ok
    rejected = 0
    mutations = 0
    for i, clause in enumerate(f.clauses):
        for j in range(3):
            c = list(clause)
            c[j] = -c[j]
            mutant = Formula(f.variable_count, [c if k == i else list(x) for k, x in enumerate(f.clauses)])
            mutations += 1
            rejected += not validate_b2(mutant).ok
    rng = make_rng(606)
    unsat = 0
    formulas = 0
    for nvars in (3, 6, 9, 12):
        for _ in range(25):
            g = random_b2_formula(rng, nvars)
            assert len(g.clauses) < 20 and validate_b2(g).ok
            formulas += 1
            unsat += sat_bruteforce(g) is None
    elapsed = time.perf_counter() - start
    ok = accepts and rejected >= 10 and rejected == mutations and formulas == 100 and not unsat \
        and elapsed < 30
    record_acceptance(6, ok, f"example accepted: {accepts}, {rejected}/{mutations} mutations rejected, "
                             f"{formulas - unsat}/{formulas} random formulas satisfiable, "
                             f"{elapsed:.2f} s (limit 30 s)")
    assert ok


def test_criterion_7_io_render_cli(tmp_path):
    mismatched = []
    for src in sorted(DATA.iterdir()):
        out = tmp_path / src.name
        if src.name == "phi_meta.json":
            continue  # written together with phi_instance.json below
        if src.suffix == ".cnf":
            write_formula(out, read_formula(src))
        elif src.name.startswith("corner_witness"):
            write_witness(out, read_witness(src))
        elif src.name.startswith("segment"):
            write_curve(out, read_curve(src))
        else:
            write_instance(out, read_instance(src))
        if out.read_bytes() != src.read_bytes():
            mismatched.append(src.name)
    r = read_reduction(DATA / "phi_instance.json", DATA / "phi_meta.json")
    write_reduction(tmp_path / "i.json", tmp_path / "m.json", r)
    if (tmp_path / "m.json").read_bytes() != (DATA / "phi_meta.json").read_bytes():
        mismatched.append("phi_meta.json")
    inst = read_instance(DATA / "phi_instance.json")
    svg_stable = render_svg(inst, cylinders=True) == render_svg(read_instance(DATA / "phi_instance.json"),
                                                               cylinders=True)
    (tmp_path / "cli").mkdir()
    cli_failures = run_matrix(tmp_path / "cli")
    ok = not mismatched and svg_stable and not cli_failures
    record_acceptance(7, ok, f"{len(mismatched)} fixture files changed on round trip, SVG stable: "
                             f"{svg_stable}, {len(cli_failures)} CLI exit-code mismatches")
    assert ok, (mismatched, cli_failures)
