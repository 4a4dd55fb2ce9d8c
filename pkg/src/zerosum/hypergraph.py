"""Uniform hypergraphs, edge weightings and vertex imbalances.

All arithmetic is exact (:class:`fractions.Fraction`).  Edges are stored in
canonical form: each edge is a sorted tuple of vertex ids and the edge list
is sorted lexicographically with duplicates removed, so a weighting can be
indexed positionally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import InvalidParameters, InvalidWeighting

ONE = Fraction(1)


@dataclass(frozen=True)
class Hypergraph:
    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]
    classes: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise InvalidParameters(f"need n >= 1 and r >= 1, got n={self.n}, r={self.r}")
        canon = set()
        for e in self.edges:
            edge = tuple(sorted(int(v) for v in e))
            if len(edge) != self.r or len(set(edge)) != self.r:
                raise InvalidParameters(f"edge {tuple(e)} does not have {self.r} distinct vertices")
            if edge[0] < 0 or edge[-1] >= self.n:
                raise InvalidParameters(f"edge {tuple(e)} has a vertex outside [0, {self.n})")
            canon.add(edge)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        if self.classes is not None:
            blocks = tuple(tuple(sorted(int(v) for v in b)) for b in self.classes)
            if len(blocks) != self.r:
                raise InvalidParameters(f"expected {self.r} vertex classes, got {len(blocks)}")
            flat = [v for b in blocks for v in b]
            if sorted(flat) != list(range(self.n)):
                raise InvalidParameters("vertex classes must partition [0, n)")
            owner = {v: i for i, b in enumerate(blocks) for v in b}
            for e in self.edges:
                if sorted(owner[v] for v in e) != list(range(self.r)):
                    raise InvalidParameters(f"edge {e} does not meet every class exactly once")
            object.__setattr__(self, "classes", blocks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def isolated_vertices(self) -> list[int]:
        return [v for v, d in enumerate(self.degrees()) if d == 0]

    def incident_edges(self) -> list[list[int]]:
        """Edge indices incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return inc

    def edge_index(self) -> dict[tuple[int, ...], int]:
        return {e: j for j, e in enumerate(self.edges)}


@dataclass(frozen=True)
class Weighting:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        for v in vals:
            if not -ONE <= v <= ONE:
                raise InvalidWeighting(f"weight {v} outside [-1, 1]")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __neg__(self):
        return Weighting(tuple(-v for v in self.values))

    @classmethod
    def zeros(cls, m: int) -> "Weighting":
        return cls((Fraction(0),) * m)


@dataclass(frozen=True)
class SignPattern:
    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (1, -1) for s in signs):
            raise InvalidParameters("sign pattern entries must be +1 or -1")
        object.__setattr__(self, "signs", signs)

    def __len__(self):
        return len(self.signs)

    @property
    def positive(self) -> list[int]:
        return [v for v, s in enumerate(self.signs) if s == 1]

    @property
    def negative(self) -> list[int]:
        return [v for v, s in enumerate(self.signs) if s == -1]

    @classmethod
    def from_positive(cls, n: int, positive: Iterable[int]) -> "SignPattern":
        pos = set(positive)
        return cls(tuple(1 if v in pos else -1 for v in range(n)))


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    if not 1 <= r <= n:
        raise InvalidParameters(f"complete hypergraph needs 1 <= r <= n, got n={n}, r={r}")
    return Hypergraph(n, r, tuple(combinations(range(n), r)))


def complete_equipartite(r: int, n: int) -> Hypergraph:
    """Complete r-partite r-uniform hypergraph with r classes of size n.

    Class i is the block ``[i*n, (i+1)*n)``.
    """
    if r < 1 or n < 1:
        raise InvalidParameters(f"complete equipartite needs r >= 1 and n >= 1, got r={r}, n={n}")
    blocks = tuple(tuple(range(i * n, (i + 1) * n)) for i in range(r))
    return Hypergraph(r * n, r, tuple(product(*blocks)), blocks)


def _check(H: Hypergraph, f: Weighting):
    if len(f) != H.m:
        raise InvalidWeighting(f"weighting has {len(f)} values but hypergraph has {H.m} edges")


def imbalances(H: Hypergraph, f: Weighting) -> list[Fraction]:
    """Sum of incident edge weights, for every vertex."""
    _check(H, f)
    out = [Fraction(0)] * H.n
    for e, w in zip(H.edges, f.values):
        if w:
            for v in e:
                out[v] += w
    return out


def vertex_imbalance(H: Hypergraph, f: Weighting, v: int) -> Fraction:
    _check(H, f)
    if not 0 <= v < H.n:
        raise InvalidParameters(f"vertex {v} outside [0, {H.n})")
    return sum((w for e, w in zip(H.edges, f.values) if v in e), Fraction(0))


def unbalancedness(H: Hypergraph, f: Weighting) -> Fraction:
    """min over vertices of |imbalance|.  Isolated vertices force 0."""
    return min(abs(x) for x in imbalances(H, f))


def total_sum(H: Hypergraph, f: Weighting) -> Fraction:
    _check(H, f)
    return sum(f.values, Fraction(0))


def imbalance_signs(H: Hypergraph, f: Weighting, zero: int = -1) -> SignPattern:
    """Sign pattern of the vertex imbalances; vertices with imbalance 0 get ``zero``."""
    return SignPattern(tuple(1 if x > 0 else -1 if x < 0 else zero for x in imbalances(H, f)))


def make_weighting(H: Hypergraph, values: Sequence) -> Weighting:
    f = Weighting(tuple(values))
    _check(H, f)
    return f
