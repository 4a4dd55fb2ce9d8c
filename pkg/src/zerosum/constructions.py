"""Explicit weightings that attain (or probe) the bounds."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .bounds import fractional_level_value, m_of_k, max_chi
from .errors import InvalidParameters, RegimeViolation
from .hypergraph import (Hypergraph, SignPattern, Weighting, complete_equipartite,
                         complete_hypergraph, total_sum)

ONE = Fraction(1)
ZERO = Fraction(0)


class Construction(NamedTuple):
    hypergraph: Hypergraph
    weighting: Weighting
    signs: SignPattern

    @property
    def total(self) -> Fraction:
        return total_sum(self.hypergraph, self.weighting)

    @property
    def zero_sum(self) -> bool:
        return self.total == 0


def edge_weight(edge, signs: SignPattern) -> int:
    """Number of '+' vertices minus number of '-' vertices in the edge."""
    return sum(signs.signs[v] for v in edge)


def _sign(x) -> Fraction:
    return ONE if x > 0 else -ONE if x < 0 else ZERO


def majority_weighting_complete(n: int, r: int) -> Construction:
    """K_n^r with +1 on edges mostly inside V_1, -1 mostly outside, 0 on ties.

    V_1 is the first ceil(n/2) vertices.  For odd n the weighting need not
    sum to zero; check ``Construction.zero_sum``.
    """
    if n < 2:
        raise InvalidParameters(f"need n >= 2, got {n}")
    H = complete_hypergraph(n, r)
    signs = SignPattern.from_positive(n, range(-(-n // 2)))
    f = Weighting(tuple(_sign(edge_weight(e, signs)) for e in H.edges))
    return Construction(H, f, signs)


def _split_classes(r: int, n: int) -> SignPattern:
    # first half of every class is '+'
    return SignPattern(tuple(1 if v % n < n // 2 else -1 for v in range(r * n)))


def equipartite_majority(r: int, n: int) -> Construction:
    if r % 2 == 0 or n % 2:
        raise RegimeViolation(f"equipartite majority needs r odd and n even, got r={r}, n={n}")
    K = complete_equipartite(r, n)
    signs = _split_classes(r, n)
    f = Weighting(tuple(_sign(edge_weight(e, signs)) for e in K.edges))
    return Construction(K, f, signs)


def equipartite_threshold(r: int, n: int, k: int) -> Construction:
    """Sub-hypergraph of K(r; n) keeping the edges with |w_A| >= k, weighted by sign(w_A)."""
    if n % 4:
        raise RegimeViolation(f"threshold construction needs 4 | n, got n={n}")
    if not 0 < k <= r or (k - r) % 2:
        raise RegimeViolation(f"threshold k={k} must satisfy 0 < k <= r={r} and k = r mod 2")
    K = complete_equipartite(r, n)
    signs = _split_classes(r, n)
    kept = [e for e in K.edges if abs(edge_weight(e, signs)) >= k]
    H = Hypergraph(K.n, r, tuple(kept), K.classes)
    f = Weighting(tuple(_sign(edge_weight(e, signs)) for e in H.edges))
    return Construction(H, f, signs)


def threshold_weighting_complete(n: int, r: int, k: int) -> Construction:
    """K_n^r with |N| = k: -1 below level m(k), the fractional value on m(k), +1 above.

    Level of an edge = number of its vertices in P, the first n - k vertices.
    """
    H = complete_hypergraph(n, r)
    m = m_of_k(n, r, k)
    frac = fractional_level_value(n, r, k)
    signs = SignPattern.from_positive(n, range(n - k))
    size = n - k
    values = []
    for e in H.edges:
        l = sum(1 for v in e if v < size)
        values.append(frac if l == m else ONE if l > m else -ONE)
    return Construction(H, Weighting(tuple(values)), signs)


def optimal_weighting_complete(n: int, r: int) -> Construction:
    """Threshold weighting at the smallest k maximising chi(n, r, k)."""
    if n < 2:
        raise InvalidParameters(f"need n >= 2, got {n}")
    _, k = max_chi(n, r)
    return threshold_weighting_complete(n, r, k)

