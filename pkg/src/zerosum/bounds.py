"""Closed-form upper bounds on the unbalancedness X(H).

Besides the bounds themselves this module exposes the quantities used to
derive the complete-hypergraph bound (edge class sizes, the fractional
level m(k), chi(k), G(k, s)) so that they can be checked independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .cube import binom, max_semi_threshold, xbar_semi_threshold
from .errors import InvalidParameters


@dataclass(frozen=True)
class BoundReport:
    value: Fraction | float
    kind: str
    parameters: dict[str, Any] = field(default_factory=dict)
    attained: bool | None = None

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"bound must be non-negative, got {self.value}")


def balogh_smyth_bound(r: int, n: int, D, alpha) -> float:
    """sqrt((D + alpha^2 D^2 (r-1)) / r) * n^(r-1) for D-regular equipartite H.

    The only floating-point quantity in the package.
    """
    D, alpha = Fraction(D), Fraction(alpha)
    if r < 1 or n < 1:
        raise InvalidParameters(f"need r >= 1 and n >= 1, got r={r}, n={n}")
    if D <= 0:
        raise InvalidParameters(f"degree density D must be positive, got {D}")
    if not -1 <= alpha <= 1:
        raise InvalidParameters(f"alpha={alpha} outside [-1, 1]")
    radicand = (D + alpha ** 2 * D ** 2 * (r - 1)) / r
    return math.sqrt(radicand) * n ** (r - 1)


def complete_partite_bound(r: int, n: int) -> Fraction:
    """C(r-1, floor(r/2)) (n/2)^(r-1): bound for the complete r-partite K(r; n)."""
    if r < 1 or n < 1:
        raise InvalidParameters(f"need r >= 1 and n >= 1, got r={r}, n={n}")
    return binom(r - 1, r // 2) * Fraction(n, 2) ** (r - 1)


def equipartite_bound(r: int, n: int, e: int) -> BoundReport:
    """Bound for r-uniform r-equipartite hypergraphs with classes of size n and e edges."""
    if r < 1 or n < 1:
        raise InvalidParameters(f"need r >= 1 and n >= 1, got r={r}, n={n}")
    if not 0 <= e <= n ** r:
        raise InvalidParameters(f"edge count e={e} outside [0, n^r = {n ** r}]")
    lam = Fraction(e, n ** r)
    g = max_semi_threshold(r, lam)
    value = xbar_semi_threshold(g) * n ** (r - 1)
    return BoundReport(value, "equipartite",
                       {"r": r, "n": n, "e": e, "lambda": lam, "k": g.k, "beta": g.beta})


# -- complete hypergraphs ---------------------------------------------------
#
# Throughout, P is the positive side of a vertex bipartition, |P| = n - k and
# |N| = k; level l collects the edges meeting P in exactly l vertices.

def _check_k(n, r, k):
    if r < 1 or n < 2:
        raise InvalidParameters(f"need r >= 1 and n >= 2, got n={n}, r={r}")
    if not 0 < k < n:
        raise InvalidParameters(f"k={k} must satisfy 0 < k < n={n}")


def edge_class_sizes(n: int, r: int, k: int) -> list[int]:
    """|E_l| = C(n-k, l) C(k, r-l) for l = 0..r."""
    _check_k(n, r, k)
    return [binom(n - k, l) * binom(k, r - l) for l in range(r + 1)]


def m_of_k(n: int, r: int, k: int) -> int:
    """Level carrying the single fractional value of the optimal weighting.

    Smallest nonempty level m whose cumulative size reaches the size of
    everything above it.
    """
    sizes = edge_class_sizes(n, r, k)
    total = sum(sizes)
    if total == 0:
        raise InvalidParameters(f"no edges: every level is empty for n={n}, r={r}")
    below = 0
    for m, size in enumerate(sizes):
        below += size
        if size and below >= total - below:
            return m
    raise AssertionError("unreachable")


def level_value(n: int, r: int, k: int, i: int) -> Fraction:
    """Value forced on level i when lower levels are -1, higher levels +1 and the sum is 0."""
    sizes = edge_class_sizes(n, r, k)
    if not sizes[i]:
        raise InvalidParameters(f"level {i} is empty")
    return Fraction(sum(sizes[:i]) - sum(sizes[i + 1:]), sizes[i])


def fractional_level_value(n: int, r: int, k: int) -> Fraction:
    return level_value(n, r, k, m_of_k(n, r, k))


def _spread(sizes, s):
    return sum(abs(s - l) * size for l, size in enumerate(sizes))


def chi(n: int, r: int, k: int) -> Fraction:
    """X of the threshold weighting with |N| = k: sum |m-l||E_l| / max(n-k, k)."""
    sizes = edge_class_sizes(n, r, k)
    return Fraction(_spread(sizes, m_of_k(n, r, k)), max(n - k, k))


def max_chi(n: int, r: int) -> tuple[Fraction, int]:
    """(max_k chi(n, r, k), maximising k).

    Among maximisers the k nearest n/2 is chosen, and ceil(n/2) on a tie.
    """
    values = {k: chi(n, r, k) for k in range(1, n)}
    best = max(values.values())
    k = min((k for k, v in values.items() if v == best), key=lambda k: (abs(2 * k - n), -k))
    return best, k


def complete_bound_literal(n: int, r: int) -> Fraction:
    """The complete-hypergraph bound with binomials C(n-k, l) C(k, r-l), k = ceil(n/2)."""
    k = -(-n // 2)
    return Fraction(_spread(edge_class_sizes(n, r, k), -(-r // 2)), k)


def complete_bound(n: int, r: int) -> BoundReport:
    """Upper bound on X(K_n^r) over [-1, 1]-valued zero-sum weightings.

    With k = ceil(n/2) taken as the size of the positive side,
    sum_l |ceil(r/2) - l| C(k, l) C(n-k, r-l) / k.  For even n this coincides
    with the reading that places k on the negative side
    (:func:`complete_bound_literal`); for odd n that reading overshoots
    max_k chi whenever r is odd, and the report records both values.
    """
    if not 1 <= r <= n or n < 2:
        raise InvalidParameters(f"need 1 <= r <= n and n >= 2, got n={n}, r={r}")
    k = -(-n // 2)
    centre = -(-r // 2)
    value = Fraction(_spread(edge_class_sizes(n, r, n - k), centre), k)
    literal = complete_bound_literal(n, r)
    return BoundReport(value, "complete",
                       {"n": n, "r": r, "k": k, "centre": centre,
                        "literal_value": literal, "readings_agree": literal == value})


def g_function(n: int, r: int, k: int, s: int) -> Fraction:
    """G(k, s) = sum_l |s-l||E_l| / (n-k)."""
    if not 0 <= s <= r:
        raise InvalidParameters(f"s={s} outside [0, r={r}]")
    return Fraction(_spread(edge_class_sizes(n, r, k), s), n - k)


def g_difference_identity(n: int, r: int, k: int, s: int) -> tuple[Fraction, Fraction]:
    """G(k+1, s) - G(k, s), computed directly and through the collected closed form."""
    if not 0 < k < n - 1:
        raise InvalidParameters(f"k={k} must satisfy 0 < k < n-1 = {n - 1}")
    direct = g_function(n, r, k + 1, s) - g_function(n, r, k, s)
    sizes = edge_class_sizes(n, r, k)
    closed = Fraction(s * (sum(sizes[:s + 1]) - sum(sizes[s + 1:])), (n - k) * (n - k - 1))
    return direct, closed


def f_function(n: int, r: int, k: int) -> Fraction:
    return g_function(n, r, k, m_of_k(n, r, k))


def f_monotonicity_check(n: int, r: int) -> bool:
    """F(k) = G(k, m(k)) non-decreasing and m(k) - m(k+1) in {0, 1} for 0 < k < floor(n/2)."""
    if n < 4 or not 1 <= r <= n:
        raise InvalidParameters(f"need n >= 4 and 1 <= r <= n, got n={n}, r={r}")
    for k in range(1, n // 2):
        if f_function(n, r, k + 1) < f_function(n, r, k):
            return False
        if m_of_k(n, r, k) - m_of_k(n, r, k + 1) not in (0, 1):
            return False
    return True
