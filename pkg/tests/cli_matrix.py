"""Exit-code matrix for the command-line tool, shared by the CLI and acceptance tests."""

import subprocess
import sys
from pathlib import Path

DATA = Path(__file__).parent / "data"


def run_cli(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "cpsm", *map(str, args)], capture_output=True,
                          text=True, cwd=cwd, timeout=120)


def matrix(tmp: Path):
    """(label, argv, expected exit code, substring expected on stdout or stderr)."""
    d = DATA
    inst, meta = tmp / "phi.json", tmp / "phi_meta.json"
    return [
        ("frechet identical", ["frechet", d / "segment_low.json", d / "segment_low.json", "0"], 0, "YES"),
        ("frechet far", ["frechet", d / "segment_low.json", d / "segment_high.json", "1.5"], 1, "NO"),
        ("frechet touching", ["frechet", d / "segment_low.json", d / "segment_high.json", "2"], 0, "YES"),
        ("frechet distance", ["frechet", d / "segment_low.json", d / "segment_high.json", "--distance"],
         0, "2.000000"),
        ("frechet missing eps", ["frechet", d / "segment_low.json", d / "segment_high.json"], 2, "epsilon"),
        ("solve exact no", ["solve", d / "corner_unique_all.json"], 1, "NO"),
        ("solve subset yes", ["solve", d / "corner_subset.json", "--method", "subset"], 0, "YES"),
        ("solve restricted yes", ["solve", d / "straight.json", "--method", "restricted"], 0, "YES"),
        ("solve restriction", ["solve", d / "u_turn.json", "--method", "restricted"], 3,
         "restriction violated"),
        ("solve wrong variant", ["solve", d / "corner_unique_all.json", "--method", "restricted"], 2,
         "nonunique-all"),
        ("reduce", ["reduce", d / "phi.cnf", "-o", inst, "--meta", meta], 0, "103 segments, 96 points"),
        ("reduce non-B2", ["reduce", d / "phi_mutated.cnf", "-o", tmp / "x.json", "--meta", tmp / "y.json"],
         2, "occurs 3 times"),
        ("witness sat", ["witness", inst, meta, "--assignment", "x1=0,x2=0,x3=1", "-o", tmp / "w1.json"],
         0, ""),
        ("verify sat", ["verify", inst, tmp / "w1.json"], 0, "VALID"),
        ("witness unsat", ["witness", inst, meta, "--assignment", "x1=1,x2=0,x3=1", "-o", tmp / "w2.json"],
         0, "falsifies clauses 2"),
        ("verify unsat", ["verify", inst, tmp / "w2.json"], 1, "uncovered point 1"),
        ("witness bad assignment", ["witness", inst, meta, "--assignment", "x1=1", "-o", tmp / "w3.json"],
         2, "x2"),
        ("verify corner", ["verify", d / "corner_subset.json", d / "corner_witness_abd.json"], 0, "VALID"),
        ("validate ok", ["validate-formula", d / "phi.cnf"], 0, "OK"),
        ("validate mutated", ["validate-formula", d / "phi_mutated.cnf"], 1, "literal x3 occurs 3 times"),
        ("render", ["render", d / "corner_subset.json", "--witness", d / "corner_witness_abd.json",
                    "--cylinders", "-o", tmp / "c.svg"], 0, ""),
        ("render 3d", ["render", d / "skew_3d.json"], 2, "2-D"),
        ("missing file", ["verify", tmp / "nope.json", tmp / "nope.json"], 2, "cannot read"),
        ("bad json", ["solve", d / "phi.cnf"], 2, "invalid JSON"),
        ("unknown command", ["frobnicate"], 2, ""),
        ("negative eps", ["frechet", d / "segment_low.json", d / "segment_low.json", "--", "-1"], 2,
         "non-negative"),
    ]


def run_matrix(tmp: Path):
    """Run every row in order; return the failing rows as readable strings."""
    failures = []
    for label, argv, code, needle in matrix(tmp):
        res = run_cli(*argv)
        if res.returncode != code or needle not in res.stdout + res.stderr:
            failures.append(f"{label}: exit {res.returncode} (want {code}); "
                            f"out={res.stdout[-200:]!r} err={res.stderr[-200:]!r}")
    return failures
