"""Seeded random instances for the property suites.

All generators draw from a caller-supplied :class:`random.Random` (Python's
Mersenne Twister), so a suite is reproduced exactly by its seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .cube import CubeFunction, ProductMeasure, expectation
from .hypergraph import Weighting


def random_fraction(rng: random.Random, lo=-1, hi=1, max_den: int = 12) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(int(lo * den), int(hi * den)), den)


def random_measure(rng: random.Random, r: int, max_den: int = 12) -> ProductMeasure:
    """Product measure with every p_i strictly inside (0, 1)."""
    p = []
    for _ in range(r):
        den = rng.randint(2, max_den)
        p.append(Fraction(rng.randint(1, den - 1), den))
    return ProductMeasure(tuple(p))


def _balance(values):
    pos = sum(v for v in values if v > 0)
    neg = -sum(v for v in values if v < 0)
    if pos == 0 or neg == 0:
        return [Fraction(0)] * len(values)
    if pos > neg:
        return [v * neg / pos if v > 0 else v for v in values]
    return [v * pos / neg if v < 0 else v for v in values]


def random_zero_sum_weighting(rng: random.Random, m: int, max_den: int = 12) -> Weighting:
    """Weighting in [-1, 1] summing to zero: the heavier side is scaled down."""
    return Weighting(tuple(_balance([random_fraction(rng, max_den=max_den) for _ in range(m)])))


def random_cube_function(rng: random.Random, r: int, max_den: int = 12) -> CubeFunction:
    return CubeFunction(r, tuple(random_fraction(rng, max_den=max_den) for _ in range(1 << r)))


def random_zero_mean_cube_function(rng: random.Random, mu: ProductMeasure,
                                   max_den: int = 12) -> CubeFunction:
    """Random f with E_mu[f] = 0, by scaling down the heavier sign under mu."""
    f = random_cube_function(rng, mu.r, max_den)
    w = mu.weights()
    pos = sum(a * v for a, v in zip(w, f.table) if v > 0)
    neg = -sum(a * v for a, v in zip(w, f.table) if v < 0)
    if pos == 0 or neg == 0:
        table = (Fraction(0),) * len(f.table)
    elif pos > neg:
        table = tuple(v * neg / pos if v > 0 else v for v in f.table)
    else:
        table = tuple(v * pos / neg if v < 0 else v for v in f.table)
    g = CubeFunction(mu.r, table)
    assert expectation(g, mu) == 0
    return g
