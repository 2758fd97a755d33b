"""(3,B2)-SAT formulas: representation, restriction checks, brute force, sampling.

A literal is a non-zero int: ``v`` for variable v and ``-v`` for its negation
(DIMACS convention, variables numbered from 1).  A (3,B2) formula has three
literals over distinct variables per clause, every literal occurs exactly
twice, and no two clauses share two literals.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

MAX_BRUTEFORCE_VARS = 24


@dataclass(frozen=True)
class Formula:
    variable_count: int
    clauses: tuple

    def __init__(self, variable_count: int, clauses: Sequence[Sequence[int]]):
        if variable_count < 0:
            raise ValueError("variable_count must be non-negative")
        norm = []
        for j, clause in enumerate(clauses, start=1):
            c = tuple(int(x) for x in clause)
            if len(c) != 3:
                raise ValueError(f"clause {j} has {len(c)} literals, expected 3")
            if any(x == 0 or abs(x) > variable_count for x in c):
                raise ValueError(f"clause {j} has a literal outside 1..{variable_count}")
            if len({abs(x) for x in c}) != 3:
                raise ValueError(f"clause {j} repeats a variable")
            norm.append(c)
        object.__setattr__(self, "variable_count", int(variable_count))
        object.__setattr__(self, "clauses", tuple(norm))

    def occurrences(self, literal: int) -> list[int]:
        """0-based indices of the clauses containing ``literal``."""
        return [j for j, c in enumerate(self.clauses) if literal in c]

    def evaluate(self, assignment: "Assignment") -> bool:
        return not self.falsified(assignment)

    def falsified(self, assignment: "Assignment") -> list[int]:
        """0-based indices of clauses that ``assignment`` leaves false."""
        if len(assignment.values) != self.variable_count:
            raise ValueError("assignment does not cover every variable")
        return [j for j, c in enumerate(self.clauses)
                if not any(assignment.value(x) for x in c)]


@dataclass(frozen=True)
class Assignment:
    values: tuple  # values[v - 1] is the truth value of variable v

    def __init__(self, values: Sequence[bool]):
        object.__setattr__(self, "values", tuple(bool(v) for v in values))

    def value(self, literal: int) -> bool:
        v = self.values[abs(literal) - 1]
        return v if literal > 0 else not v

    def to_string(self) -> str:
        return ",".join(f"x{i}={int(v)}" for i, v in enumerate(self.values, start=1))

    @classmethod
    def parse(cls, text: str, variable_count: int) -> "Assignment":
        """Parse ``"x1=1,x2=0,..."``; every variable must be given exactly once."""
        vals: dict[int, bool] = {}
        for item in filter(None, (s.strip() for s in text.split(","))):
            name, sep, val = item.partition("=")
            name = name.strip()
            if not sep or not name.startswith("x") or not name[1:].isdigit():
                raise ValueError(f"bad assignment item {item!r}")
            v = int(name[1:])
            if not 1 <= v <= variable_count:
                raise ValueError(f"unknown variable {name}")
            if v in vals:
                raise ValueError(f"variable {name} assigned twice")
            if val.strip() not in ("0", "1"):
                raise ValueError(f"value for {name} must be 0 or 1")
            vals[v] = val.strip() == "1"
        missing = [f"x{v}" for v in range(1, variable_count + 1) if v not in vals]
        if missing:
            raise ValueError("unassigned variables: " + ", ".join(missing))
        return cls([vals[v] for v in range(1, variable_count + 1)])


def literal_name(lit: int) -> str:
    return f"x{lit}" if lit > 0 else f"-x{-lit}"


@dataclass
class B2Report:
    ok: bool
    violations: list = field(default_factory=list)
    trivial: bool = False


def validate_b2(f: Formula) -> B2Report:
    """Check the two (3,B2) restrictions; problems are reported, not raised."""
    if not f.clauses:
        return B2Report(True, [], trivial=True)
    counts = Counter(x for c in f.clauses for x in c)
    problems = []
    for v in range(1, f.variable_count + 1):
        for lit in (v, -v):
            if counts[lit] != 2:
                problems.append(f"literal {literal_name(lit)} occurs {counts[lit]} times")
    for (i, a), (j, b) in itertools.combinations(enumerate(f.clauses, start=1), 2):
        shared = sorted(set(a) & set(b), key=abs)
        if len(shared) >= 2:
            names = ", ".join(literal_name(x) for x in shared)
            problems.append(f"clauses {i} and {j} share literals {names}")
    return B2Report(not problems, problems)


def sat_bruteforce(f: Formula) -> Assignment | None:
    """First satisfying assignment in lexicographic order (False before True)."""
    if f.variable_count > MAX_BRUTEFORCE_VARS:
        raise ValueError(f"brute force limited to {MAX_BRUTEFORCE_VARS} variables")
    for values in itertools.product((False, True), repeat=f.variable_count):
        a = Assignment(values)
        if not f.falsified(a):
            return a
    return None


def all_assignments(variable_count: int):
    for values in itertools.product((False, True), repeat=variable_count):
        yield Assignment(values)


def random_b2_formula(rng: random.Random, variable_count: int,
                      max_tries: int = 10_000) -> Formula:
    """Uniformly shuffled (3,B2) formula; needs a multiple of 3 variables.

    Each variable contributes four literal occurrences, so the clause count
    is 4V/3.  Shuffles that break a restriction are rejected and redrawn.
    """
    if variable_count <= 0 or variable_count % 3:
        raise ValueError("variable_count must be a positive multiple of 3")
    pool = [lit for v in range(1, variable_count + 1) for lit in (v, v, -v, -v)]
    for _ in range(max_tries):
        rng.shuffle(pool)
        clauses = [pool[i:i + 3] for i in range(0, len(pool), 3)]
        if any(len({abs(x) for x in c}) != 3 for c in clauses):
            continue
        f = Formula(variable_count, clauses)
        if validate_b2(f).ok:
            return f
    raise RuntimeError("could not sample a (3,B2) formula")


def example_formula() -> Formula:
    """(x | y | z) & (-x | y | -z) & (-x | -y | z) & (x | -y | -z) with x, y, z = 1, 2, 3."""
    return Formula(3, [(1, 2, 3), (-1, 2, -3), (-1, -2, 3), (1, -2, -3)])
