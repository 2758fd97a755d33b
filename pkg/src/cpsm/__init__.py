"""Curve/point-set matching under the Fréchet distance.

Decision and distance routines for polygonal curves, the polynomial
algorithm for restricted instances, an exact search oracle, and the
(3,B2)-SAT hardness construction with its self-checks.
"""

from .frechet import decide_frechet, frechet_distance, free_space_diagram
from .geometry import ParamInterval, ParamPoint, PolyCurve, Segment
from .reduction import (ClauseRing, CornerSpec, ReductionOutput, build_clause_ring, build_reduction,
                        clause_strip, corner_violations, make_alpha_corner, plan_corner_chain,
                        validate_reduction, witness_from_assignment)
from .sat import Assignment, Formula, random_b2_formula, sat_bruteforce, validate_b2
from .solvers import (Instance, RestrictionError, Variant, check_restriction, decide_subset_nonunique,
                      dedupe_witness, solve_exact, solve_restricted, verify_witness)

__all__ = [
    "Assignment", "ClauseRing", "CornerSpec", "Formula", "Instance", "ParamInterval", "ParamPoint",
    "PolyCurve", "ReductionOutput", "RestrictionError", "Segment", "Variant", "build_clause_ring",
    "build_reduction", "check_restriction", "clause_strip", "corner_violations", "decide_frechet",
    "decide_subset_nonunique", "dedupe_witness", "frechet_distance", "free_space_diagram",
    "make_alpha_corner", "plan_corner_chain", "random_b2_formula", "sat_bruteforce", "solve_exact",
    "solve_restricted", "validate_b2", "validate_reduction", "verify_witness", "witness_from_assignment",
]
