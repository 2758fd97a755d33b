import math

import pytest
from hypothesis import given, settings, strategies as st

from cpsm.frechet import decide_frechet, decide_subcurve_vs_segment, free_space_diagram, frechet_distance
from cpsm.geometry import ParamPoint, PolyCurve

from oracles import frechet_bounds

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
point = st.tuples(coord, coord)
curve = st.lists(point, min_size=2, max_size=5)


def test_identical_curves_have_distance_zero():
    c = [(0, 0), (3, 1), (4, 5)]
    assert decide_frechet(c, c, 0.0)
    assert frechet_distance(c, c) == pytest.approx(0.0, abs=1e-6)


def test_parallel_offset_segments():
    a, b = [(0, 0), (1, 0)], [(0, 2), (1, 2)]
    assert not decide_frechet(a, b, 1.0)
    assert decide_frechet(a, b, 2.0)
    assert frechet_distance(a, b) == pytest.approx(2.0, abs=1e-6)


def test_backtracking_costs_more_than_hausdorff():
    # Q doubles back along P; the Hausdorff distance is 0, Fréchet is not.
    p = [(0, 0), (4, 0)]
    q = [(0, 0), (3, 0), (1, 0), (4, 0)]
    assert frechet_distance(p, q) == pytest.approx(1.0, abs=1e-6)


def test_endpoints_must_match():
    assert not decide_frechet([(0, 0), (1, 0)], [(0, 0), (3, 0)], 1.0)


def test_diagram_shape():
    d = free_space_diagram([(0, 0), (1, 0), (2, 0)], [(0, 0.5), (2, 0.5)], 1.0)
    assert len(d.cells) == 1 and len(d.cells[0]) == 2
    assert d.accepted


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        decide_frechet([(0, 0), (1, 0)], [(0, 0, 0), (1, 0, 0)], 1.0)


def test_subcurve_against_segment():
    P = PolyCurve([(0, 0), (2, 0), (2, 2)])
    assert decide_subcurve_vs_segment(P, ParamPoint(1, 0.5), ParamPoint(2, 0.0), (1, 0.5), (2, 0.5), 1.0)
    assert not decide_subcurve_vs_segment(P, ParamPoint(1, 0.0), ParamPoint(2, 1.0), (0, 0), (0, 2), 1.0)


@settings(max_examples=60, deadline=None)
@given(curve, curve)
def test_distance_matches_discrete_oracle(p, q):
    lo, hi = frechet_bounds(p, q, 0.05)
    d = frechet_distance(p, q, tol=1e-7)
    assert lo - 1e-6 <= d <= hi + 1e-6


@settings(max_examples=60, deadline=None)
@given(curve, curve, st.floats(0.01, 15))
def test_decision_is_consistent_with_distance(p, q, eps):
    d = frechet_distance(p, q, tol=1e-9)
    if eps > d + 1e-6:
        assert decide_frechet(p, q, eps)
    elif eps < d - 1e-6:
        assert not decide_frechet(p, q, eps)


@settings(max_examples=40, deadline=None)
@given(curve, curve)
def test_symmetry_and_reversal(p, q):
    d = frechet_distance(p, q, tol=1e-8)
    assert frechet_distance(q, p, tol=1e-8) == pytest.approx(d, abs=1e-6)
    assert frechet_distance(p[::-1], q[::-1], tol=1e-8) == pytest.approx(d, abs=1e-6)


@settings(max_examples=40, deadline=None)
@given(point, point, point, point)
def test_close_endpoints_give_close_segments(a, b, da, db):
    # Two segments whose endpoints pair up within eps are within eps.
    eps = max(math.dist(a, da), math.dist(b, db))
    assert decide_frechet([a, b], [da, db], eps)
