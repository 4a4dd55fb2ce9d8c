"""Exact oracles for max X(f) and the symmetrisation reductions.

Two independent routes compute the maximum unbalancedness of a hypergraph:

* :func:`enumerate_pm1_max` scans every balanced +-1 weighting;
* :func:`lp_max` solves one exact linear program per vertex sign pattern
  over the relaxed codomain [-1, 1].

:func:`exact_complete_max` instead evaluates the closed form max_k chi for
complete hypergraphs and returns the matching threshold weighting.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain, combinations, islice, product
from math import comb
from typing import Any, NamedTuple

import numpy as np

from .bounds import max_chi
from .constructions import optimal_weighting_complete
from .cube import CubeFunction, ProductMeasure, index_of
from .errors import InstanceTooLarge, InvalidParameters, InvalidWeighting, NoFeasibleWeighting
from .hypergraph import Hypergraph, SignPattern, Weighting, imbalances, total_sum
from .simplex import maximize

ENUMERATION_MAX_EDGES = 24
LP_MAX_VERTICES = 16
_CHUNK = 1 << 16


@dataclass
class OracleResult:
    value: Fraction
    witness: Weighting
    method: str
    explored: int
    hypergraph: Hypergraph
    notes: dict[str, Any] = field(default_factory=dict)


def thread_budget() -> int:
    """Worker cap from ZS_THREADS; defaults to the CPU count."""
    env = os.environ.get("ZS_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def enumerate_pm1_max(H: Hypergraph) -> OracleResult:
    """Maximum of X over all zero-sum +-1 weightings, by exhaustive search.

    Candidates are visited in lexicographic order of their sign vectors
    (-1 < +1) and the first maximiser is returned.
    """
    m = H.m
    if m % 2:
        raise NoFeasibleWeighting(f"{m} edges: no zero-sum +-1 weighting exists")
    if m > ENUMERATION_MAX_EDGES:
        raise InstanceTooLarge(f"{m} edges exceeds the enumeration budget of {ENUMERATION_MAX_EDGES}")
    half = m // 2
    total = comb(m, half)
    inc = np.zeros((m, H.n), dtype=np.int64)
    for j, e in enumerate(H.edges):
        inc[j, list(e)] = 1
    deg = inc.sum(axis=0)

    if m == 0:
        return OracleResult(Fraction(0), Weighting(()), "enumeration", 1, H)
    best_val, best_combo = -1, None
    combos = combinations(range(m), half)
    while True:
        flat = np.fromiter(chain.from_iterable(islice(combos, _CHUNK)), dtype=np.int64)
        if not flat.size:
            break
        block = flat.reshape(-1, half)
        neg = np.zeros((block.shape[0], m), dtype=np.int64)
        np.put_along_axis(neg, block, 1, axis=1)
        scores = np.abs(deg[None, :] - 2 * (neg @ inc)).min(axis=1)
        i = int(scores.argmax())
        if scores[i] > best_val:
            best_val, best_combo = int(scores[i]), tuple(int(v) for v in block[i])

    negative = set(best_combo)
    witness = Weighting(tuple(Fraction(-1 if j in negative else 1) for j in range(m)))
    return OracleResult(Fraction(best_val), witness, "enumeration", total, H)


def _pattern_lp(args):
    H_edges, n, signs = args
    m = len(H_edges)
    nvar = 2 * m + 1
    t = 2 * m
    A_ub, b_ub = [], []
    for v in range(n):
        row = [0] * nvar
        row[t] = 1
        for j, e in enumerate(H_edges):
            if v in e:
                row[j] = -signs[v]
                row[m + j] = signs[v]
        A_ub.append(row)
        b_ub.append(0)
    for j in range(2 * m):
        row = [0] * nvar
        row[j] = 1
        A_ub.append(row)
        b_ub.append(1)
    eq = [1] * m + [-1] * m + [0]
    c = [0] * t + [1]
    res = maximize(c, A_ub, b_ub, [eq], [0])
    f = tuple(res.x[j] - res.x[m + j] for j in range(m))
    return res.value, f


def sign_patterns(n: int):
    """Vertex sign patterns with vertex 0 fixed to +1, in a fixed order."""
    for mask in range(1 << (n - 1)):
        yield (1,) + tuple(-1 if mask >> (v - 1) & 1 else 1 for v in range(1, n))


def lp_max(H: Hypergraph, workers: int = 1) -> OracleResult:
    """Maximum of X over zero-sum [-1, 1]-weightings, by exact linear programming.

    For each sign pattern s (vertex 0 fixed to '+') solve
    ``max t  s.t.  s(v) * imbalance(v) >= t,  sum f = 0,  -1 <= f <= 1``
    and return the best pattern; ties keep the earliest pattern.
    """
    if H.n > LP_MAX_VERTICES:
        raise InstanceTooLarge(f"{H.n} vertices exceeds the LP budget of {LP_MAX_VERTICES}")
    patterns = list(sign_patterns(H.n))
    jobs = [(H.edges, H.n, s) for s in patterns]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_pattern_lp, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_pattern_lp(j) for j in jobs]
    best, best_i = None, None
    for i, (value, _) in enumerate(results):
        if best is None or value > best:
            best, best_i = value, i
    witness = Weighting(results[best_i][1])
    return OracleResult(best, witness, "linear-program", len(patterns), H,
                        {"pattern": patterns[best_i]})


def exact_complete_max(n: int, r: int, lp_check_max_n: int = 7) -> OracleResult:
    """max_k chi(n, r, k) with the threshold weighting attaining it.

    For odd n the value is additionally compared against :func:`lp_max`
    when n <= ``lp_check_max_n``.
    """
    if n < 2 or not 1 <= r <= n:
        raise InvalidParameters(f"need n >= 2 and 1 <= r <= n, got n={n}, r={r}")
    value, k = max_chi(n, r)
    c = optimal_weighting_complete(n, r)
    notes: dict[str, Any] = {"k": k}
    if n % 2 and n <= lp_check_max_n:
        lp = lp_max(c.hypergraph)
        notes["lp_value"] = lp.value
        notes["lp_agrees"] = lp.value == value
    return OracleResult(value, c.weighting, "reduced", n - 1, c.hypergraph, notes)


# -- symmetrisation ---------------------------------------------------------

def _require_zero_sum(H, f):
    s = total_sum(H, f)
    if s != 0:
        raise InvalidWeighting(f"weighting must sum to zero, sums to {s}")


def is_complete(H: Hypergraph) -> bool:
    return H.m == comb(H.n, H.r)


def symmetrize_complete(H: Hypergraph, f: Weighting, P: SignPattern) -> Weighting:
    """Average f over the edge classes E_j = {A : |A & P| = j}."""
    if not is_complete(H):
        raise InvalidParameters("symmetrize_complete needs a complete hypergraph")
    if len(P) != H.n:
        raise InvalidParameters(f"sign pattern has length {len(P)}, need {H.n}")
    _require_zero_sum(H, f)
    level = [sum(1 for v in e if P.signs[v] == 1) for e in H.edges]
    sums = [Fraction(0)] * (H.r + 1)
    counts = [0] * (H.r + 1)
    for l, w in zip(level, f.values):
        sums[l] += w
        counts[l] += 1
    return Weighting(tuple(sums[l] / counts[l] for l in level))


class PartiteSymmetrization(NamedTuple):
    hypergraph: Hypergraph
    weighting: Weighting
    signs: SignPattern


def ambient_equipartite(H: Hypergraph) -> Hypergraph:
    """Complete r-partite hypergraph on the vertex classes of H."""
    if H.classes is None:
        raise InvalidParameters("hypergraph has no vertex classes")
    sizes = {len(b) for b in H.classes}
    if len(sizes) != 1:
        raise InvalidParameters(f"vertex classes are not of equal size: {sorted(sizes)}")
    return Hypergraph(H.n, H.r, tuple(product(*H.classes)), H.classes)


def _phi(edge, owner, signs):
    x = [0] * len(edge)
    for v in edge:
        x[owner[v]] = signs[v]
    return index_of(x)


def symmetrize_partite(H: Hypergraph, f: Weighting) -> PartiteSymmetrization:
    """Extend f by zero to the ambient K(r; n) and average it over the classes of phi.

    Vertex v of class i is '+' when its imbalance under f is >= 0; phi(A)_i
    is the sign of the vertex of A in class i.
    """
    K = ambient_equipartite(H)
    _require_zero_sum(H, f)
    signs = SignPattern(tuple(1 if x >= 0 else -1 for x in imbalances(H, f)))
    owner = {v: i for i, b in enumerate(K.classes) for v in b}
    given = dict(zip(H.edges, f.values))
    keys = [_phi(e, owner, signs.signs) for e in K.edges]
    sums: dict[int, Fraction] = {}
    counts: dict[int, int] = {}
    for key, e in zip(keys, K.edges):
        sums[key] = sums.get(key, Fraction(0)) + given.get(e, Fraction(0))
        counts[key] = counts.get(key, 0) + 1
    g = Weighting(tuple(sums[key] / counts[key] for key in keys))
    return PartiteSymmetrization(K, g, signs)


def cube_projection(K: Hypergraph, f: Weighting, signs: SignPattern) -> tuple[CubeFunction, ProductMeasure]:
    """Read a class-constant weighting of K(r; n) as a function on {-1,1}^r.

    Returns h with h(phi(A)) = f(A) and the product measure with
    p_i = |C_i^+| / |C_i|.  Cube points with no edge (possible only when some
    p_i is 0 or 1) get h = 0.
    """
    if K.classes is None:
        raise InvalidParameters("hypergraph has no vertex classes")
    owner = {v: i for i, b in enumerate(K.classes) for v in b}
    table: dict[int, Fraction] = {}
    for e, w in zip(K.edges, f.values):
        key = _phi(e, owner, signs.signs)
        if table.setdefault(key, w) != w:
            raise InvalidWeighting("weighting is not constant on the classes of phi")
    h = CubeFunction(K.r, tuple(table.get(i, Fraction(0)) for i in range(1 << K.r)))
    p = tuple(Fraction(sum(1 for v in b if signs.signs[v] == 1), len(b)) for b in K.classes)
    return h, ProductMeasure(p)

