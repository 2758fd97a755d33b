"""Command-line front end.

Exit codes: 0 yes/valid, 1 no/invalid, 2 input error, 3 restriction violated.
"""

from __future__ import annotations

import argparse
import sys

from .frechet import decide_frechet, frechet_distance
from .io import (InputError, atomic_write_text, read_curve, read_formula, read_instance,
                 read_reduction, read_witness, write_reduction, write_witness)
from .reduction import build_reduction, witness_from_assignment
from .render import render_svg
from .sat import Assignment, validate_b2
from .solvers import (RestrictionError, Variant, decide_subset_nonunique, solve_exact,
                      solve_restricted, verify_witness)

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_RESTRICTION = 0, 1, 2, 3


def _answer(witness, out) -> int:
    if witness is None:
        print("NO")
        return EXIT_NO
    print("YES")
    if out:
        write_witness(out, witness)
    else:
        print(" ".join(str(i) for i in witness))
    return EXIT_YES


def cmd_frechet(args) -> int:
    a, b = read_curve(args.curve_a), read_curve(args.curve_b)
    if a.dim != b.dim:
        raise InputError(f"curves differ in dimension ({a.dim} vs {b.dim})")
    if args.distance:
        print(f"{frechet_distance(a, b, args.tol):.6f}")
        return EXIT_YES
    if args.epsilon is None:
        raise InputError("epsilon is required unless --distance is given")
    if args.epsilon < 0:
        raise InputError("epsilon must be non-negative")
    ok = decide_frechet(a, b, args.epsilon)
    print("YES" if ok else "NO")
    return EXIT_YES if ok else EXIT_NO


def cmd_solve(args) -> int:
    inst = read_instance(args.instance)
    if args.method == "restricted":
        if inst.variant is not Variant.NONUNIQUE_ALL:
            raise InputError("the restricted method needs a nonunique-all instance")
        try:
            w = solve_restricted(inst)
        except RestrictionError as e:
            print("restriction violated")
            for line in e.report.summary().split("; "):
                print(f"  {line}")
            return EXIT_RESTRICTION
    elif args.method == "subset":
        if inst.variant is not Variant.NONUNIQUE_SUBSET:
            raise InputError("the subset method needs a nonunique-subset instance")
        w = decide_subset_nonunique(inst)
    else:
        w = solve_exact(inst, args.max_len)
    return _answer(w, args.output)


def cmd_reduce(args) -> int:
    f = read_formula(args.formula)
    rep = validate_b2(f)
    if not rep.ok or rep.trivial:
        raise InputError("formula is not a non-empty (3,B2) formula: " + "; ".join(rep.violations))
    r = build_reduction(f, args.eps)
    write_reduction(args.output, args.meta, r)
    print(f"{r.instance.n} segments, {r.instance.k} points, ring radius {r.ring.radius:g}")
    return EXIT_YES


def cmd_witness(args) -> int:
    r = read_reduction(args.instance, args.meta)
    try:
        a = Assignment.parse(args.assignment, r.formula.variable_count)
    except ValueError as e:
        raise InputError(str(e)) from e
    write_witness(args.output, witness_from_assignment(r, a))
    missed = r.formula.falsified(a)
    if missed:
        print("assignment falsifies clauses " + ", ".join(str(j + 1) for j in missed))
    return EXIT_YES


def cmd_verify(args) -> int:
    inst = read_instance(args.instance)
    w = read_witness(args.witness, inst)
    rep = verify_witness(inst, w)
    if rep.ok:
        print("VALID")
        return EXIT_YES
    for v in rep.violations:
        print(v)
    return EXIT_NO


def cmd_validate_formula(args) -> int:
    rep = validate_b2(read_formula(args.formula))
    if rep.ok:
        print("OK (trivial)" if rep.trivial else "OK")
        return EXIT_YES
    for v in rep.violations:
        print(v)
    return EXIT_NO


def cmd_render(args) -> int:
    inst = read_instance(args.instance)
    if inst.curve.dim != 2:
        raise InputError("render needs a 2-D instance")
    w = read_witness(args.witness, inst) if args.witness else None
    svg = render_svg(inst, w, cylinders=args.cylinders)
    if args.output == "-":
        sys.stdout.write(svg)
    else:
        atomic_write_text(args.output, svg)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cpsm", description="Curve/point-set matching tools.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("frechet", help="decide or compute the Fréchet distance of two curves")
    s.add_argument("curve_a")
    s.add_argument("curve_b")
    s.add_argument("epsilon", nargs="?", type=float)
    s.add_argument("--distance", action="store_true", help="print the distance instead")
    s.add_argument("--tol", type=float, default=1e-6)
    s.set_defaults(func=cmd_frechet)

    s = sub.add_parser("solve", help="decide an instance")
    s.add_argument("instance")
    s.add_argument("--method", choices=("restricted", "exact", "subset"), default="exact")
    s.add_argument("--max-len", type=int, default=None)
    s.add_argument("-o", "--output", help="witness file to write on YES")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("reduce", help="build the instance for a (3,B2) DIMACS formula")
    s.add_argument("formula")
    s.add_argument("--eps", type=float, default=1.0)
    s.add_argument("-o", "--output", required=True, help="instance file")
    s.add_argument("--meta", required=True, help="reduction metadata file")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("witness", help="witness for an assignment on a reduction")
    s.add_argument("instance")
    s.add_argument("meta")
    s.add_argument("--assignment", required=True, help='e.g. "x1=1,x2=0,x3=1"')
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("verify", help="check a witness against an instance")
    s.add_argument("instance")
    s.add_argument("witness")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("validate-formula", help="check the (3,B2) restrictions")
    s.add_argument("formula")
    s.set_defaults(func=cmd_validate_formula)

    s = sub.add_parser("render", help="draw an instance as SVG")
    s.add_argument("instance")
    s.add_argument("--witness")
    s.add_argument("--cylinders", action="store_true")
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_YES
    if getattr(args, "eps", 1.0) is not None and getattr(args, "eps", 1.0) <= 0:
        print("error: eps must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
