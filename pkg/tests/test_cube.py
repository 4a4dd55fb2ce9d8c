from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from zerosum import cube
from zerosum.cube import (CubeFunction, ProductMeasure, SemiThreshold, abs_expectation, conditional_expectation,
                          expectation, level_one_correlation, max_semi_threshold, measure_of_point,
                          semi_threshold_function, shift, shift_to_uniform, xbar, xbar_semi_threshold)
from zerosum.errors import DegenerateMeasure, InvalidParameters
from zerosum.sampling import random_measure, random_zero_mean_cube_function

U = ProductMeasure.uniform


def majority(r):
    return CubeFunction.from_callable(r, lambda x: 1 if sum(x) > 0 else -1 if sum(x) < 0 else 0)


def brute_conditional(f, p, i, s):
    """E[f | x_i = s] by explicit enumeration of points as sign tuples."""
    num = den = F(0)
    for x in product((-1, 1), repeat=f.r):
        if x[i] != s:
            continue
        w = F(1)
        for q, xj in zip(p, x):
            w *= q if xj == 1 else 1 - q
        num += w * f(x)
        den += w
    return num / den


class TestMeasure:
    def test_uniform(self):
        assert all(measure_of_point(U(3), x) == F(1, 8) for x in product((-1, 1), repeat=3))

    def test_point_mass(self):
        assert measure_of_point(ProductMeasure((1, 1)), (1, 1)) == 1

    def test_product(self):
        assert measure_of_point(ProductMeasure((F(1, 4), F(1, 2))), (1, -1)) == F(1, 8)

    def test_length_mismatch(self):
        with pytest.raises(InvalidParameters):
            measure_of_point(U(2), (1, 1, 1))

    def test_weights_sum_to_one(self):
        mu = ProductMeasure((F(1, 3), F(2, 7), F(1, 5)))
        assert sum(mu.weights()) == 1
        assert mu.weights() == [measure_of_point(mu, cube.point(3, i)) for i in range(8)]


class TestExpectations:
    def test_constant(self):
        f = CubeFunction.constant(3, F(-2, 5))
        assert expectation(f, U(3)) == F(-2, 5)
        assert abs_expectation(f, U(3)) == F(2, 5)

    def test_majority_conditional(self):
        assert conditional_expectation(majority(3), U(3), 1, 1) == F(1, 2)

    def test_one_dimensional(self):
        f = CubeFunction(1, (F(-1, 5), F(3, 5)))  # index 0 is x=-1
        assert expectation(f, ProductMeasure((F(1, 4),))) == 0

    def test_degenerate(self):
        f = majority(2)
        with pytest.raises(DegenerateMeasure):
            conditional_expectation(f, ProductMeasure((1, F(1, 2))), 0, -1)
        with pytest.raises(DegenerateMeasure):
            xbar(f, ProductMeasure((0, F(1, 2))))

    def test_conditional_matches_enumeration(self, rng):
        for _ in range(20):
            r = rng.randint(1, 4)
            mu = random_measure(rng, r)
            f = random_zero_mean_cube_function(rng, mu)
            for i in range(r):
                for s in (1, -1):
                    assert conditional_expectation(f, mu, i, s) == brute_conditional(f, mu.p, i, s)


class TestXbar:
    def test_majority(self):
        assert xbar(majority(3), U(3)) == F(1, 2)

    def test_zero(self):
        assert xbar(CubeFunction.constant(4, 0), U(4)) == 0

    def test_r2_sign(self):
        assert xbar(majority(2), U(2)) == F(1, 2)

    def test_can_be_negative(self):
        assert xbar(CubeFunction.constant(2, F(1, 2)), U(2)) == F(-1, 2)


class TestSemiThreshold:
    def test_majority(self):
        assert semi_threshold_function(SemiThreshold(3, 1, 1)) == majority(3)

    def test_k0(self):
        assert semi_threshold_function(SemiThreshold(2, 0, 0)) == majority(2)

    def test_read_off(self):
        g = semi_threshold_function(SemiThreshold(4, 2, F(3, 4)))
        expected = {4: 1, 2: F(3, 4), 0: 0, -2: F(-3, 4), -4: -1}
        for x in product((-1, 1), repeat=4):
            assert g(x) == expected[sum(x)]

    @pytest.mark.parametrize("r,k,beta", [(3, 2, 0), (3, 5, 0), (2, 0, F(1, 2)), (2, 2, F(3, 2))])
    def test_invalid(self, r, k, beta):
        with pytest.raises(InvalidParameters):
            SemiThreshold(r, k, beta)

    @pytest.mark.parametrize("r,lam,k,beta", [
        (3, 1, 1, 1),
        (4, F(1, 2), 2, F(3, 4)),
        (2, F(4, 5), 0, 0),
        (3, F(3, 4), 1, F(2, 3)),
        (3, 0, 3, 0),
    ])
    def test_max_semi_threshold(self, r, lam, k, beta):
        assert max_semi_threshold(r, lam) == SemiThreshold(r, k, F(beta))

    def test_max_semi_threshold_range(self):
        with pytest.raises(InvalidParameters):
            max_semi_threshold(3, F(5, 4))

    @pytest.mark.parametrize("r,k,beta,value", [(3, 1, 1, F(1, 2)), (4, 2, F(3, 4), F(5, 16)), (2, 0, 0, F(1, 2))])
    def test_xbar_closed_form(self, r, k, beta, value):
        t = SemiThreshold(r, k, F(beta))
        assert xbar_semi_threshold(t) == value
        assert xbar(semi_threshold_function(t), U(r)) == value

    def test_closed_form_grid(self):
        for r in range(1, 13):
            for k in range(r % 2, r + 1, 2):
                for beta in ((0,) if k == 0 else (0, F(1, 3), F(1, 2), 1)):
                    t = SemiThreshold(r, k, F(beta))
                    if r <= 9 or k >= r - 2:
                        g = semi_threshold_function(t)
                        assert xbar_semi_threshold(t) == xbar(g, U(r))
                        assert cube.semi_threshold_mass(t) == abs_expectation(g, U(r))

    def test_max_is_exact_mass(self, rng):
        for _ in range(100):
            r = rng.randint(1, 8)
            lam = F(rng.randint(0, 1000), 1000)
            t = max_semi_threshold(r, lam)
            mass = abs_expectation(semi_threshold_function(t), U(r))
            assert mass == min(lam, cube.max_mass(r))


class TestShift:
    def test_uniform_identity(self):
        f = majority(3)
        assert shift(f, U(3), 1) == (f, U(3))

    def test_one_dimensional(self):
        f = CubeFunction(1, (F(-1, 5), F(3, 5)))
        g, nu = shift(f, ProductMeasure((F(1, 4),)), 0)
        assert g.table == (F(-1, 5), F(1, 5))
        assert nu.p == (F(1, 2),)
        assert expectation(g, nu) == 0
        assert abs_expectation(g, nu) == F(1, 5) < F(3, 10) == abs_expectation(f, ProductMeasure((F(1, 4),)))

    def test_symmetric_fixed(self, rng):
        # f(x) = f(x^1) for all x
        base = [F(rng.randint(-4, 4), 4) for _ in range(4)]
        f = CubeFunction(3, tuple(base[i >> 1] for i in range(8)))
        g, _ = shift(f, ProductMeasure((F(1, 5), F(1, 3), F(2, 3))), 0)
        assert g == f

    def test_reflected_branch(self):
        f = CubeFunction(1, (F(3, 5), F(-1, 5)))  # mirror image of the 1-d example
        g, nu = shift(f, ProductMeasure((F(3, 4),)), 0)
        assert g.table == (F(1, 5), F(-1, 5))

    def test_out_of_range(self):
        with pytest.raises(InvalidParameters):
            shift(majority(2), U(2), 2)

    def test_to_uniform_single(self):
        f = CubeFunction(1, (F(-1, 5), F(3, 5)))
        mu = ProductMeasure((F(1, 4),))
        assert shift_to_uniform(f, mu) == shift(f, mu, 0)

    def test_to_uniform_two_coordinates(self):
        mu = ProductMeasure((F(1, 4), F(1, 4)))
        f = CubeFunction.from_callable(2, lambda x: F(x[0] * x[1], 2))
        g, nu = shift_to_uniform(f, mu)
        assert nu == U(2)
        # compose the two single-coordinate steps by hand
        h1 = {x: f(x) if x[0] == -1 else F(1, 2) * f(x) + F(1, 2) * f((-x[0], x[1]))
              for x in product((-1, 1), repeat=2)}
        h2 = {x: h1[x] if x[1] == -1 else F(1, 2) * h1[x] + F(1, 2) * h1[(x[0], -x[1])] for x in h1}
        assert all(g(x) == h2[x] for x in h2)
        assert expectation(g, nu) == expectation(f, mu)


@st.composite
def zero_mean_instances(draw):
    r = draw(st.integers(1, 4))
    p = tuple(F(draw(st.integers(1, 9)), 10) for _ in range(r))
    rnd = draw(st.randoms(use_true_random=False))
    mu = ProductMeasure(p)
    return random_zero_mean_cube_function(rnd, mu), mu, draw(st.integers(0, r - 1))


@given(zero_mean_instances())
@settings(max_examples=200, deadline=None)
def test_shift_invariants(inst):
    f, mu, i = inst
    g, nu = shift(f, mu, i)
    assert expectation(g, nu) == expectation(f, mu)
    assert abs_expectation(g, nu) <= abs_expectation(f, mu)
    assert xbar(g, nu) >= xbar(f, mu)
    for j in range(f.r):
        if j != i:
            for s in (1, -1):
                assert conditional_expectation(g, nu, j, s) == conditional_expectation(f, mu, j, s)
    if mu.p[i] <= F(1, 2):
        assert conditional_expectation(g, nu, i, -1) == conditional_expectation(f, mu, i, -1)
    # uniform coordinate with zero mean: conditionals are antisymmetric and equal E[f x_i]
    xi = CubeFunction.from_callable(f.r, lambda x: x[i])
    fxi = CubeFunction(f.r, tuple(a * b for a, b in zip(g.table, xi.table)))
    assert conditional_expectation(g, nu, i, 1) == -conditional_expectation(g, nu, i, -1)
    if all(q == F(1, 2) for q in nu.p):
        assert conditional_expectation(g, nu, i, 1) == expectation(fxi, nu)


class TestLevelOne:
    def test_majority(self):
        assert level_one_correlation(majority(3), U(3)) == F(3, 2) == cube.level_one_bound(3)

    def test_constant(self):
        assert level_one_correlation(CubeFunction.constant(4, 1), U(4)) == 0

    @given(st.integers(1, 6), st.randoms(use_true_random=False))
    @settings(max_examples=100, deadline=None)
    def test_bound(self, r, rnd):
        f = CubeFunction(r, tuple(F(rnd.randint(-6, 6), 6) for _ in range(1 << r)))
        assert level_one_correlation(f, U(r)) <= cube.level_one_bound(r)

    def test_sign_function_attains_bound_even_r(self):
        # at even r any value on the zero level still attains the bound
        for r in (2, 4, 6):
            assert level_one_correlation(majority(r), U(r)) == cube.level_one_bound(r)
