"""Functions on the discrete cube {-1,1}^r under product measures.

A point of the cube is encoded as an integer index whose bit ``i`` is set
exactly when ``x_i = +1``.  Tables are dense lists of ``2**r`` exact
rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from .errors import DegenerateMeasure, InvalidParameters

MAX_ARITY = 24
HALF = Fraction(1, 2)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def point(r: int, index: int) -> tuple[int, ...]:
    return tuple(1 if index >> i & 1 else -1 for i in range(r))


def index_of(x: Sequence[int]) -> int:
    return sum(1 << i for i, xi in enumerate(x) if xi == 1)


def level(r: int, index: int) -> int:
    """Coordinate sum |x| of the point."""
    return 2 * bin(index).count("1") - r


@dataclass(frozen=True)
class ProductMeasure:
    p: tuple[Fraction, ...]

    def __post_init__(self):
        p = tuple(Fraction(q) for q in self.p)
        if not p:
            raise InvalidParameters("product measure needs at least one coordinate")
        if any(not 0 <= q <= 1 for q in p):
            raise InvalidParameters(f"probabilities must lie in [0, 1], got {p}")
        object.__setattr__(self, "p", p)

    @property
    def r(self) -> int:
        return len(self.p)

    @classmethod
    def uniform(cls, r: int) -> "ProductMeasure":
        return cls((HALF,) * r)

    def weights(self) -> list[Fraction]:
        """Measure of every cube point, in index order."""
        w = [Fraction(1)]
        for q in self.p:
            w = [a * (1 - q) for a in w] + [a * q for a in w]
        return w


@dataclass(frozen=True)
class CubeFunction:
    r: int
    table: tuple[Fraction, ...]

    def __post_init__(self):
        if not 1 <= self.r <= MAX_ARITY:
            raise InvalidParameters(f"arity must be in [1, {MAX_ARITY}], got {self.r}")
        table = tuple(Fraction(v) for v in self.table)
        if len(table) != 1 << self.r:
            raise InvalidParameters(f"table must have {1 << self.r} entries, got {len(table)}")
        if any(not -1 <= v <= 1 for v in table):
            raise InvalidParameters("cube function values must lie in [-1, 1]")
        object.__setattr__(self, "table", table)

    def __call__(self, x: Sequence[int]) -> Fraction:
        return self.table[index_of(x)]

    @classmethod
    def from_callable(cls, r: int, fn: Callable[[tuple[int, ...]], object]) -> "CubeFunction":
        return cls(r, tuple(Fraction(fn(point(r, i))) for i in range(1 << r)))

    @classmethod
    def constant(cls, r: int, c) -> "CubeFunction":
        return cls(r, (Fraction(c),) * (1 << r))


@dataclass(frozen=True)
class SemiThreshold:
    """Semi-threshold parameters: +-1 beyond level +-k, +-beta at +-k, 0 between."""

    r: int
    k: int
    beta: Fraction

    def __post_init__(self):
        beta = Fraction(self.beta)
        object.__setattr__(self, "beta", beta)
        if self.r < 1:
            raise InvalidParameters(f"arity must be positive, got {self.r}")
        if not 0 <= self.k <= self.r or (self.k - self.r) % 2:
            raise InvalidParameters(f"threshold k={self.k} must lie in [0, r] with the parity of r={self.r}")
        if not 0 <= beta <= 1:
            raise InvalidParameters(f"beta={beta} outside [0, 1]")
        if self.k == 0 and beta != 0:
            raise InvalidParameters("k = 0 forces beta = 0")


def _arity(f: CubeFunction, mu: ProductMeasure):
    if f.r != mu.r:
        raise InvalidParameters(f"arity mismatch: function has r={f.r}, measure has r={mu.r}")


def measure_of_point(mu: ProductMeasure, x: Sequence[int]) -> Fraction:
    if len(x) != mu.r:
        raise InvalidParameters(f"point has length {len(x)}, measure has r={mu.r}")
    out = Fraction(1)
    for q, xi in zip(mu.p, x):
        out *= q if xi == 1 else 1 - q
    return out


def expectation(f: CubeFunction, mu: ProductMeasure) -> Fraction:
    _arity(f, mu)
    return sum((w * v for w, v in zip(mu.weights(), f.table)), Fraction(0))


def abs_expectation(f: CubeFunction, mu: ProductMeasure) -> Fraction:
    _arity(f, mu)
    return sum((w * abs(v) for w, v in zip(mu.weights(), f.table)), Fraction(0))


def _conditional(f, weights, mu, i, s):
    mass = mu.p[i] if s == 1 else 1 - mu.p[i]
    if mass == 0:
        raise DegenerateMeasure(f"conditioning on x_{i} = {s:+d}, an event of probability 0")
    bit = 1 << i
    want = bit if s == 1 else 0
    total = sum((w * v for idx, (w, v) in enumerate(zip(weights, f.table)) if idx & bit == want),
                Fraction(0))
    return total / mass


def conditional_expectation(f: CubeFunction, mu: ProductMeasure, i: int, s: int) -> Fraction:
    """E_mu[f | x_i = s]."""
    _arity(f, mu)
    if not 0 <= i < f.r or s not in (1, -1):
        raise InvalidParameters(f"bad conditioning event x_{i} = {s}")
    return _conditional(f, mu.weights(), mu, i, s)


def xbar(f: CubeFunction, mu: ProductMeasure) -> Fraction:
    """min_i min(E[f | x_i = 1], -E[f | x_i = -1]).  Signed; may be negative."""
    _arity(f, mu)
    w = mu.weights()
    return min(min(_conditional(f, w, mu, i, 1), -_conditional(f, w, mu, i, -1))
               for i in range(f.r))


def level_one_correlation(f: CubeFunction, mu: ProductMeasure) -> Fraction:
    """E_mu[f * sum_i x_i]."""
    _arity(f, mu)
    return sum((w * v * level(f.r, idx) for idx, (w, v) in enumerate(zip(mu.weights(), f.table))),
               Fraction(0))


def level_one_bound(r: int) -> Fraction:
    """Largest E[f * sum_i x_i] over |f| <= 1 under the uniform measure."""
    return Fraction(2 * r * binom(r - 1, r // 2), 2 ** r)


def semi_threshold_function(t: SemiThreshold) -> CubeFunction:
    def value(idx):
        s = level(t.r, idx)
        if s > t.k:
            return Fraction(1)
        if s < -t.k:
            return Fraction(-1)
        if s == t.k:
            return t.beta
        if s == -t.k:
            return -t.beta
        return Fraction(0)
    return CubeFunction(t.r, tuple(value(i) for i in range(1 << t.r)))


def semi_threshold_mass(t: SemiThreshold) -> Fraction:
    """E|g| under the uniform measure, in closed form."""
    j0 = (t.k + t.r) // 2
    tail = sum(binom(t.r, j) for j in range(j0 + 1, t.r + 1))
    return Fraction(2 * tail, 2 ** t.r) + 2 * t.beta * Fraction(binom(t.r, j0), 2 ** t.r)


def max_mass(r: int) -> Fraction:
    """Largest E|g| attainable by a semi-threshold function of arity r."""
    if r % 2:
        return Fraction(1)
    return 1 - Fraction(binom(r, r // 2), 2 ** r)


def max_semi_threshold(r: int, lam) -> SemiThreshold:
    """Semi-threshold g with E|g| as large as possible subject to E|g| <= lam.

    The answer is returned in canonical form: among parameterisations of the
    same function the smallest k is used, so ``beta < 1`` except for the
    majority function at odd r.
    """
    lam = Fraction(lam)
    if not 0 <= lam <= 1:
        raise InvalidParameters(f"lambda={lam} outside [0, 1]")
    if r < 1:
        raise InvalidParameters(f"arity must be positive, got {r}")
    if lam >= max_mass(r):
        return SemiThreshold(r, 1, Fraction(1)) if r % 2 else SemiThreshold(r, 0, Fraction(0))
    for k in range(r, 0, -2):
        lo = semi_threshold_mass(SemiThreshold(r, k, 0))
        hi = semi_threshold_mass(SemiThreshold(r, k, 1))
        if lo <= lam < hi:
            return SemiThreshold(r, k, (lam - lo) / (hi - lo))
    raise AssertionError("unreachable: semi-threshold masses cover [0, max_mass)")


def xbar_semi_threshold(t: SemiThreshold) -> Fraction:
    j = (t.k + t.r) // 2
    return (2 * (1 - t.beta) * binom(t.r - 1, j) + 2 * t.beta * binom(t.r - 1, j - 1)) / Fraction(2 ** t.r)


def _reflect(f: CubeFunction, i: int) -> CubeFunction:
    bit = 1 << i
    return CubeFunction(f.r, tuple(f.table[idx ^ bit] for idx in range(len(f.table))))


def shift(f: CubeFunction, mu: ProductMeasure, i: int) -> tuple[CubeFunction, ProductMeasure]:
    """Move coordinate i of the measure to 1/2, reweighting f to keep E[f].

    With p = p_i <= 1/2 the new function is ``2p f(x) + (1-2p) f(x^i)`` on
    ``x_i = +1`` and ``f(x)`` on ``x_i = -1``.  For p_i > 1/2 the coordinate is
    reflected first and reflected back afterwards, so the side that stays
    untouched is ``x_i = +1``.
    """
    _arity(f, mu)
    if not 0 <= i < f.r:
        raise InvalidParameters(f"coordinate {i} out of range for r={f.r}")
    p = mu.p[i]
    new_mu = ProductMeasure(mu.p[:i] + (HALF,) + mu.p[i + 1:])
    if p > HALF:
        g, _ = shift(_reflect(f, i), ProductMeasure(mu.p[:i] + (1 - p,) + mu.p[i + 1:]), i)
        return _reflect(g, i), new_mu
    bit = 1 << i
    table = tuple(2 * p * v + (1 - 2 * p) * f.table[idx ^ bit] if idx & bit else v
                  for idx, v in enumerate(f.table))
    return CubeFunction(f.r, table), new_mu


def shift_to_uniform(f: CubeFunction, mu: ProductMeasure) -> tuple[CubeFunction, ProductMeasure]:
    for i in range(f.r):
        f, mu = shift(f, mu, i)
    return f, mu
