"""Evaluation tests for P_n, its derivatives, and the Bernstein bound."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from lpzonal import (
    DEGREE_CAP,
    DegreeCapError,
    DomainError,
    bernstein_envelope,
    eval_legendre,
    eval_legendre_derivative,
    eval_legendre_second,
)

# 40-digit reference values (mpmath.legendre), frozen.
HIGH_DEGREE_REFERENCE = {
    (100, 0.1234): 0.079191409279877860916,
    (1000, 0.5): -0.019168251091650277878,
    (5000, 0.99): -0.029809925309114236459,
    (10000, 0.1234): 0.0067335756594770371792,
    (10000, 0.5): -0.0060625038083171438072,
    (10000, 0.9): -0.00058041475411295642106,
}


class TestValues:
    def test_degree_zero_is_one(self):
        assert eval_legendre(0, 0.3) == 1.0

    def test_value_at_one(self):
        assert eval_legendre(4, 1.0) == 1.0
        assert eval_legendre(7, 1.0) == 1.0

    def test_exact_zero_of_p2(self):
        assert abs(eval_legendre(2, 1.0 / math.sqrt(3.0))) < 1e-14

    def test_near_zero_of_p4(self):
        # 0.34 is a plotted zero coordinate; P_4 is tiny there
        assert abs(eval_legendre(4, 0.34)) < 5e-3

    def test_against_scipy_grid(self):
        x = np.linspace(-1.0, 1.0, 211)
        for n in (3, 17, 64, 257):
            np.testing.assert_allclose(
                eval_legendre(n, x), special.eval_legendre(n, x), atol=5e-13
            )

    def test_high_degree_reference_values(self):
        # forward recurrence keeps absolute error below 1e-12 through the
        # degree cap (relative to the unit scale max |P_n| = 1)
        for (n, x), expected in HIGH_DEGREE_REFERENCE.items():
            assert abs(eval_legendre(n, x) - expected) < 1e-12

    def test_scalar_matches_vector(self):
        x = np.array([-0.9, -0.2, 0.0, 0.4, 0.99])
        vec = eval_legendre(31, x)
        for xi, vi in zip(x, vec):
            assert eval_legendre(31, float(xi)) == vi


class TestDerivatives:
    def test_endpoint_value(self):
        assert eval_legendre_derivative(5, 1.0) == 15.0
        assert eval_legendre_derivative(5, -1.0) == 15.0
        assert eval_legendre_derivative(4, -1.0) == -10.0

    def test_linear(self):
        assert eval_legendre_derivative(1, 0.7) == 1.0

    def test_even_degree_flat_at_origin(self):
        assert eval_legendre_derivative(4, 0.0) == 0.0

    def test_matches_finite_differences(self):
        x = np.linspace(-0.99, 0.99, 67)
        h = 1e-6
        for n in (2, 5, 12, 33, 55):
            fd = (eval_legendre(n, x + h) - eval_legendre(n, x - h)) / (2 * h)
            np.testing.assert_allclose(
                eval_legendre_derivative(n, x), fd, atol=1e-5
            )

    def test_second_derivative_of_line_and_parabola(self):
        assert eval_legendre_second(1, 0.5) == 0.0
        assert abs(eval_legendre_second(2, 0.2) - 3.0) < 1e-13

    def test_second_matches_fd_of_first(self):
        # cross-check at the critical point sqrt(3/7) of P_4
        x = 0.6547
        h = 1e-6
        fd = (
            eval_legendre_derivative(4, x + h) - eval_legendre_derivative(4, x - h)
        ) / (2 * h)
        assert abs(eval_legendre_second(4, x) - fd) < 1e-6


class TestInvariants:
    def test_recurrence_residual(self):
        rng = np.random.default_rng(7)
        x = rng.uniform(-1.0, 1.0, size=64)
        for n in (1, 2, 9, 40, 199, 1111):
            pm, pn, pp = (eval_legendre(k, x) for k in (n - 1, n, n + 1))
            res = np.abs((n + 1) * pp - (2 * n + 1) * x * pn + n * pm)
            assert np.all(res <= 1e-10 * np.maximum(1.0, np.abs(pp)))

    def test_bounded_by_one(self):
        x = np.linspace(-1.0, 1.0, 501)
        for n in (1, 6, 25, 120, 999):
            assert np.max(np.abs(eval_legendre(n, x))) <= 1.0 + 1e-12

    @given(st.integers(min_value=0, max_value=300),
           st.floats(min_value=-1.0, max_value=1.0, allow_nan=False))
    @settings(max_examples=60, deadline=None)
    def test_parity(self, n, x):
        left = eval_legendre(n, -x)
        right = (-1.0) ** n * eval_legendre(n, x)
        assert abs(left - right) <= 1e-12

    def test_ode_residual(self):
        x = np.linspace(-0.99, 0.99, 101)
        for n in (2, 7, 31, 144):
            res = (
                (1 - x * x) * eval_legendre_second(n, x)
                - 2 * x * eval_legendre_derivative(n, x)
                + n * (n + 1) * eval_legendre(n, x)
            )
            assert np.max(np.abs(res)) <= 1e-8 * n * (n + 1)


class TestBernstein:
    def test_value_at_origin(self):
        env = bernstein_envelope(1, 0.0)
        assert abs(env - math.sqrt(2.0 / math.pi)) < 1e-15
        assert abs(eval_legendre(1, 0.0)) <= env

    def test_dominates_extremum_of_p8(self):
        # critical point of P_8 nearest its largest zero
        x1 = 0.8997579954114602
        assert bernstein_envelope(8, x1) >= 0.4097

    def test_dominates_p100(self):
        env = bernstein_envelope(100, 0.5)
        assert abs(eval_legendre(100, 0.5)) <= env

    @given(st.integers(min_value=1, max_value=400),
           st.floats(min_value=-0.9999, max_value=0.9999, allow_nan=False))
    @settings(max_examples=60, deadline=None)
    def test_envelope_property(self, n, x):
        assert abs(eval_legendre(n, x)) <= bernstein_envelope(n, x)


class TestErrors:
    def test_domain(self):
        with pytest.raises(DomainError):
            eval_legendre(3, 1.0001)
        with pytest.raises(DomainError):
            eval_legendre_derivative(3, -1.5)
        with pytest.raises(DomainError):
            eval_legendre_second(3, 1.0)
        with pytest.raises(DomainError):
            eval_legendre_second(3, 1.0 - 1e-15)
        with pytest.raises(DomainError):
            bernstein_envelope(0, 0.5)
        with pytest.raises(DomainError):
            bernstein_envelope(3, 1.0)
        with pytest.raises(DomainError):
            eval_legendre(-1, 0.5)

    def test_degree_cap(self):
        with pytest.raises(DegreeCapError):
            eval_legendre(DEGREE_CAP + 1, 0.5)
        with pytest.raises(DegreeCapError):
            eval_legendre(51, 0.5, degree_cap=50)
        assert eval_legendre(51, 0.5, degree_cap=51) == pytest.approx(
            special.eval_legendre(51, 0.5), abs=1e-13
        )
