"""Seeded random instances for tests and demos.

``CPSM_SEED`` in the environment sets the default seed.
"""

from __future__ import annotations

import math
import os
import random

from .geometry import ParamPoint, PolyCurve, point_at
from .solvers import Instance, Variant, build_cylinder_index, check_restriction


def default_seed() -> int:
    return int(os.environ.get("CPSM_SEED", "0"))


def make_rng(seed: int | None = None) -> random.Random:
    return random.Random(default_seed() if seed is None else seed)


def random_curve(rng: random.Random, n_segments: int, box: float = 10.0) -> PolyCurve:
    return PolyCurve([(rng.uniform(0, box), rng.uniform(0, box)) for _ in range(n_segments + 1)])


def random_instance(rng: random.Random, max_n: int = 6, max_k: int = 7,
                    variant: Variant = Variant.NONUNIQUE_ALL) -> Instance:
    """Points scattered around a random curve, some deliberately off it."""
    n = rng.randint(1, max_n)
    k = rng.randint(1, max_k)
    curve = random_curve(rng, n)
    eps = rng.uniform(0.5, 2.5)
    pts = []
    for j in range(k):
        if j == 0:
            base = curve.vertices[0]
        elif j == 1:
            base = curve.vertices[-1]
        else:
            base = point_at(curve, ParamPoint(rng.randint(1, n), rng.random()))
        r = eps * rng.uniform(0.0, 1.15)
        a = rng.uniform(0, 2 * math.pi)
        pts.append((round(base[0] + r * math.cos(a), 6), round(base[1] + r * math.sin(a), 6)))
    pts = list(dict.fromkeys(pts))
    return Instance(curve, pts, eps, variant)


def random_restricted_instance(rng: random.Random, max_n: int = 6, max_k: int = 7,
                               max_tries: int = 10_000) -> Instance:
    """A random instance that satisfies the restriction and has non-empty end balls."""
    for _ in range(max_tries):
        inst = random_instance(rng, max_n, max_k)
        idx = build_cylinder_index(inst)
        if check_restriction(inst, idx).ok and idx.S[0] and idx.S[-1]:
            return inst
    raise RuntimeError("could not generate a restricted instance")
