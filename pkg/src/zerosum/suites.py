"""Verification suites run by ``zerosum verify``.

Each suite returns a list of :class:`Check` results, one per property, with
the first counterexample attached on failure.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import bounds, constructions, cube, solver
from .errors import InvalidWeighting
from .hypergraph import (complete_equipartite, complete_hypergraph, imbalance_signs, imbalances,
                         total_sum, unbalancedness)
from .sampling import random_measure, random_zero_mean_cube_function, random_zero_sum_weighting


@dataclass
class Check:
    name: str
    passed: bool = True
    cases: int = 0
    counterexample: Any = None


@dataclass
class _Recorder:
    checks: dict[str, Check] = field(default_factory=dict)

    def __call__(self, name: str, ok: bool, witness: Callable[[], Any] | Any = None):
        c = self.checks.setdefault(name, Check(name))
        c.cases += 1
        if not ok and c.passed:
            c.passed = False
            c.counterexample = witness() if callable(witness) else witness

    def results(self) -> list[Check]:
        return list(self.checks.values())


def shifts(trials: int = 1000, seed: int = 0, r_max: int = 6) -> list[Check]:
    """Joint shifting of (f, mu) to the uniform measure, on zero-mean random f."""
    rng = random.Random(seed)
    rec = _Recorder()
    for _ in range(trials):
        r = rng.randint(1, r_max)
        mu = random_measure(rng, r)
        f = random_zero_mean_cube_function(rng, mu)
        i = rng.randrange(r)
        g, nu = cube.shift(f, mu, i)
        case = lambda: {"table": f.table, "p": mu.p, "i": i}  # noqa: E731
        rec("expectation preserved", cube.expectation(g, nu) == cube.expectation(f, mu), case)
        rec("abs-expectation non-increasing", cube.abs_expectation(g, nu) <= cube.abs_expectation(f, mu), case)
        rec("xbar non-decreasing", cube.xbar(g, nu) >= cube.xbar(f, mu), case)
        rec("shifted coordinate is uniform", nu.p[i] == cube.HALF, case)
        untouched = -1 if mu.p[i] <= cube.HALF else 1
        ok = cube.conditional_expectation(g, nu, i, untouched) == cube.conditional_expectation(f, mu, i, untouched)
        rec("conditional on untouched side preserved", ok, case)
        ok = all(cube.conditional_expectation(g, nu, j, s) == cube.conditional_expectation(f, mu, j, s)
                 for j in range(r) if j != i for s in (1, -1))
        rec("off-coordinate conditionals preserved", ok, case)
        u, lam = cube.shift_to_uniform(f, mu)
        rec("shift_to_uniform reaches the uniform measure", lam == cube.ProductMeasure.uniform(r), case)
        rec("shift_to_uniform preserves expectation", cube.expectation(u, lam) == 0, case)
        rec("shift_to_uniform does not decrease xbar", cube.xbar(u, lam) >= cube.xbar(f, mu), case)
    return rec.results()


def level_one(trials: int = 1000, seed: int = 0, r_max: int = 8) -> list[Check]:
    """E[f sum x_i] <= 2r C(r-1, floor(r/2)) / 2^r, with equality for majority at odd r."""
    rng = random.Random(seed)
    rec = _Recorder()
    for _ in range(trials):
        r = rng.randint(1, r_max)
        f = cube.CubeFunction(r, tuple(Fraction(rng.randint(-12, 12), 12) for _ in range(1 << r)))
        mu = cube.ProductMeasure.uniform(r)
        rec("level-one bound", cube.level_one_correlation(f, mu) <= cube.level_one_bound(r),
            lambda: {"r": r, "table": f.table})
    for r in range(1, 10, 2):
        maj = cube.semi_threshold_function(cube.SemiThreshold(r, 1, 1))
        rec("majority attains the level-one bound",
            cube.level_one_correlation(maj, cube.ProductMeasure.uniform(r)) == cube.level_one_bound(r),
            {"r": r})
    return rec.results()


def semi_threshold(trials: int = 200, seed: int = 0, r_max: int = 10, grid: int = 1024) -> list[Check]:
    """max_semi_threshold against a brute-force grid search; closed-form xbar against direct."""
    rng = random.Random(seed)
    rec = _Recorder()
    for r in range(1, r_max + 1):
        cands = []
        for k in range(r % 2, r + 1, 2):
            for b in range(grid + 1) if k else [0]:
                t = cube.SemiThreshold(r, k, Fraction(b, grid))
                cands.append((t, cube.semi_threshold_mass(t), cube.xbar_semi_threshold(t)))
        cands.sort(key=lambda c: c[1])
        masses = [c[1] for c in cands]
        running, best_so_far = [], None
        for t, _, x in cands:
            if best_so_far is None or (x, -t.k) > (best_so_far[0], -best_so_far[1].k):
                best_so_far = (x, t)
            running.append(best_so_far[1])
        for _ in range(trials):
            lam = Fraction(rng.randint(0, 10 ** 6), 10 ** 6)
            got = cube.max_semi_threshold(r, lam)
            best = running[bisect_right(masses, lam) - 1]
            ok = got.k == best.k and abs(got.beta - best.beta) <= Fraction(1, grid)
            rec("maximiser matches grid search", ok,
                lambda: {"r": r, "lambda": lam, "got": got, "grid": best})
            rec("maximiser is feasible", cube.semi_threshold_mass(got) <= lam, {"r": r, "lambda": lam})
        for k in range(r % 2, r + 1, 2):
            for b in (0, 1, 2, 3, 4) if k else (0,):
                t = cube.SemiThreshold(r, k, Fraction(b, 4))
                direct = cube.xbar(cube.semi_threshold_function(t), cube.ProductMeasure.uniform(r))
                rec("closed-form xbar equals direct", direct == cube.xbar_semi_threshold(t), t)
    return rec.results()


def monotonicity(n_max: int = 30, r_max: int = 8) -> list[Check]:
    rec = _Recorder()
    for r in range(2, r_max + 1):
        for n in range(max(r, 2), n_max + 1):
            for k in range(1, n):
                rec("chi symmetric", bounds.chi(n, r, k) == bounds.chi(n, r, n - k), (n, r, k))
                rec("fractional level value in [-1, 1)", -1 <= bounds.fractional_level_value(n, r, k) < 1,
                    (n, r, k))
            for k in range(1, n // 2):
                rec("F non-decreasing", bounds.f_function(n, r, k + 1) >= bounds.f_function(n, r, k), (n, r, k))
                rec("m(k) - m(k+1) in {0, 1}",
                    bounds.m_of_k(n, r, k) - bounds.m_of_k(n, r, k + 1) in (0, 1), (n, r, k))
            for k in range(1, n - 1):
                for s in range(r + 1):
                    direct, closed = bounds.g_difference_identity(n, r, k, s)
                    rec("G difference identity", direct == closed, (n, r, k, s))
            best, _ = bounds.max_chi(n, r)
            rec("complete bound equals max chi", bounds.complete_bound(n, r).value == best, (n, r))
    return rec.results()


def symmetry(trials: int = 500, seed: int = 0) -> list[Check]:
    """Symmetrisation on K_5^2, K_6^2 and K(3; 2) plus the cube projection identity."""
    rng = random.Random(seed)
    rec = _Recorder()
    complete = [complete_hypergraph(5, 2), complete_hypergraph(6, 2)]
    K = complete_equipartite(3, 2)
    for t in range(trials):
        H = complete[t % 2]
        f = random_zero_sum_weighting(rng, H.m)
        case = lambda: {"n": H.n, "r": H.r, "f": f.values}  # noqa: E731
        P = imbalance_signs(H, f)
        g = solver.symmetrize_complete(H, f, P)
        rec("complete: total sum preserved", total_sum(H, g) == total_sum(H, f), case)
        level = [sum(1 for v in e if P.signs[v] == 1) for e in H.edges]
        rec("complete: class-constant",
            all(g.values[a] == g.values[b] for a in range(H.m) for b in range(H.m) if level[a] == level[b]), case)
        rec("complete: X non-decreasing", unbalancedness(H, g) >= unbalancedness(H, f), case)
        imb = imbalances(H, g)
        pos, neg = P.positive, P.negative
        if pos and neg:
            rec("complete: |P| imb_P + |N| imb_N = 0", len(pos) * imb[pos[0]] + len(neg) * imb[neg[0]] == 0, case)

        f = random_zero_sum_weighting(rng, K.m)
        case = lambda: {"f": f.values}  # noqa: E731
        Kp, g, signs = solver.symmetrize_partite(K, f)
        rec("partite: total sum preserved", total_sum(Kp, g) == 0, case)
        rec("partite: X non-decreasing", unbalancedness(Kp, g) >= unbalancedness(K, f), case)
        try:
            h, mu = solver.cube_projection(Kp, g, signs)
        except InvalidWeighting:
            rec("partite: class-constant", False, case)
            continue
        rec("partite: class-constant", True, case)
        rec("partite: E[h] = 0", cube.expectation(h, mu) == 0, case)
        imb = imbalances(Kp, g)
        n = len(Kp.classes[0])
        ok = True
        for i, block in enumerate(Kp.classes):
            for v in block:
                cond = cube.conditional_expectation(h, mu, i, signs.signs[v])
                ok &= imb[v] == cond * n ** (Kp.r - 1)
        rec("cube projection reproduces imbalances", ok, case)
    return rec.results()


def oracle_vs_bound(n_max: int = 6, workers: int = 1) -> list[Check]:
    rec = _Recorder()
    for n in range(2, n_max + 1):
        for r in range(1, n + 1):
            H = complete_hypergraph(n, r)
            lp = solver.lp_max(H, workers=workers)
            bound = bounds.complete_bound(n, r).value
            rec("lp_max <= complete bound", lp.value <= bound, (n, r, lp.value, bound))
            if n % 2 == 0:
                rec("lp_max = complete bound (even n)", lp.value == bound, (n, r, lp.value, bound))
            rec("lp_max = max chi", lp.value == bounds.max_chi(n, r)[0], (n, r, lp.value))
            rec("lp witness attains its value", unbalancedness(H, lp.witness) == lp.value, (n, r))
            if H.m % 2 == 0 and H.m <= solver.ENUMERATION_MAX_EDGES:
                en = solver.enumerate_pm1_max(H)
                rec("enumeration <= lp_max", en.value <= lp.value, (n, r, en.value, lp.value))
    for r, n in ((2, 2), (2, 3), (3, 2)):
        K = complete_equipartite(r, n)
        lp = solver.lp_max(K, workers=workers)
        bound = bounds.equipartite_bound(r, n, n ** r).value
        rec("lp_max <= equipartite bound", lp.value <= bound, (r, n, lp.value, bound))
    return rec.results()


def constructions_suite(n_max: int = 12, r_max: int = 5) -> list[Check]:
    rec = _Recorder()
    for n in range(2, n_max + 1):
        for r in range(1, min(r_max, n) + 1):
            c = constructions.optimal_weighting_complete(n, r)
            x = unbalancedness(c.hypergraph, c.weighting)
            rec("optimal weighting is zero-sum", c.zero_sum, (n, r))
            rec("optimal weighting attains max chi", x == bounds.max_chi(n, r)[0], (n, r, x))
            rec("optimal weighting attains complete bound", x == bounds.complete_bound(n, r).value, (n, r, x))
            if n % 2 == 0:
                c = constructions.majority_weighting_complete(n, r)
                x = unbalancedness(c.hypergraph, c.weighting)
                rec("majority is zero-sum (even n)", c.zero_sum, (n, r))
                rec("majority attains complete bound (even n)", x == bounds.complete_bound(n, r).value, (n, r, x))
    for r in (1, 3, 5):
        for n in (2, 4, 6, 8):
            if r == 5 and n > 4:
                continue
            c = constructions.equipartite_majority(r, n)
            x = unbalancedness(c.hypergraph, c.weighting)
            rec("equipartite majority is zero-sum", c.zero_sum, (r, n))
            rec("equipartite majority attains complete-partite bound",
                x == bounds.complete_partite_bound(r, n), (r, n, x))
    for n in (4, 8):
        for r in range(1, 5):
            for k in range(2 - r % 2, r + 1, 2):
                c = constructions.equipartite_threshold(r, n, k)
                x = unbalancedness(c.hypergraph, c.weighting)
                rec("threshold construction is zero-sum", c.zero_sum, (r, n, k))
                rec("threshold construction attains equipartite bound",
                    x == bounds.equipartite_bound(r, n, c.hypergraph.m).value, (r, n, k, x))
    return rec.results()


SUITES = {
    "shifts": shifts,
    "level-one": level_one,
    "semi-threshold": semi_threshold,
    "monotonicity": monotonicity,
    "symmetry": symmetry,
    "oracle-vs-bound": oracle_vs_bound,
    "constructions": constructions_suite,
}
