"""Quadrature of sign-partitioned Lp integrals against exact oracles."""

import math

import numpy as np
import pytest
import sympy as sp

from lpzonal import (
    ConfigError,
    ConvergenceError,
    DomainError,
    QuadratureConfig,
    arch_integral_above_largest_zero,
    darboux_upper_bound,
    legendre_extrema,
    norm_ratio,
    positive_part_lower_bound,
    signed_lp_integrals,
    symmetric_lp_integrals,
    triangle_lower_bound,
)


def exact_split_integrals(n: int, p: int):
    """Symbolic oracle: exact (I_plus, I_minus) on [0, 1] for integer p."""
    x = sp.Symbol("x")
    poly = sp.legendre(n, x)
    roots = [r for r in sp.Poly(poly, x).real_roots() if r > 0]
    points = [sp.Integer(0), *roots, sp.Integer(1)]
    i_plus = sp.Integer(0)
    i_minus = sp.Integer(0)
    for a, b in zip(points, points[1:]):
        mid = sp.Rational(1, 2) * (a + b)
        sign = 1 if poly.subs(x, mid) > 0 else -1
        cell = sp.integrate((sign * poly) ** p, (x, a, b))
        if sign > 0:
            i_plus += cell
        else:
            i_minus += cell
    return float(i_plus), float(i_minus)


def simpson_positive_part(n: int, p: float, points: int = 40001) -> float:
    """Brute-force composite-Simpson oracle for the positive-part integral."""
    x = np.linspace(0.0, 1.0, points)
    from lpzonal import eval_legendre

    f = np.maximum(eval_legendre(n, x), 0.0) ** p
    h = x[1] - x[0]
    return h / 3.0 * (f[0] + f[-1] + 4.0 * np.sum(f[1:-1:2]) + 2.0 * np.sum(f[2:-1:2]))


class TestConfig:
    def test_rejects_bad_values(self):
        with pytest.raises(ConfigError):
            QuadratureConfig(base_nodes=7)
        with pytest.raises(ConfigError):
            QuadratureConfig(rel_tol=1.0)
        with pytest.raises(ConfigError):
            QuadratureConfig(rel_tol=0.0)
        with pytest.raises(ConfigError):
            QuadratureConfig(refinement_factor=1)


class TestSignedIntegrals:
    def test_p1_is_positive_on_unit_interval(self):
        i_plus, i_minus, err = signed_lp_integrals(1, 1.0)
        assert i_plus == pytest.approx(0.5, abs=1e-14)
        assert i_minus == 0.0
        assert err < 1e-12

    def test_p2_closed_form(self):
        # both parts of P_2 integrate to 1/(3 sqrt(3)) at p = 1
        i_plus, i_minus, _ = signed_lp_integrals(2, 1.0)
        exact = 1.0 / (3.0 * math.sqrt(3.0))
        assert i_plus == pytest.approx(exact, rel=1e-13)
        assert i_minus == pytest.approx(exact, rel=1e-13)

    @pytest.mark.parametrize("n", [2, 3])
    @pytest.mark.parametrize("p", [1, 2])
    def test_against_symbolic_oracle(self, n, p):
        i_plus, i_minus, _ = signed_lp_integrals(n, float(p))
        exact_plus, exact_minus = exact_split_integrals(n, p)
        assert i_plus == pytest.approx(exact_plus, rel=1e-12)
        assert i_minus == pytest.approx(exact_minus, rel=1e-12)

    def test_against_simpson_oracle(self):
        i_plus, _, _ = signed_lp_integrals(4, 6.0)
        assert i_plus == pytest.approx(simpson_positive_part(4, 6.0), abs=1e-9)
        assert i_plus >= 1.0 / 70.0

    def test_error_estimate_scale(self):
        i_plus, i_minus, err = signed_lp_integrals(40, 6.0)
        assert 0.0 < err <= 1e-9 * (i_plus + i_minus)

    def test_refinement_moves_less_than_estimate(self):
        base = QuadratureConfig()
        finer = QuadratureConfig(base_nodes=96)
        for n, p in ((12, 6.0), (9, 2.5)):
            ap, am, err = signed_lp_integrals(n, p, base)
            bp, bm, _ = signed_lp_integrals(n, p, finer)
            assert abs(ap - bp) + abs(am - bm) <= err

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            signed_lp_integrals(0, 1.0)
        with pytest.raises(DomainError):
            signed_lp_integrals(4, 0.0)

    def test_kink_exponent_fails_to_converge(self):
        # |P_n|^0.5 has square-root cusps at the cell boundaries; three
        # doublings cannot reach 1e-10
        with pytest.raises(ConvergenceError):
            signed_lp_integrals(3, 0.5)


class TestSphereReduction:
    @pytest.mark.parametrize("n,p", [(4, 6.0), (8, 4.5), (8, 2.0)])
    def test_full_interval_is_twice_unit_interval(self, n, p):
        up, um, _ = signed_lp_integrals(n, p)
        sp_, sm, _ = symmetric_lp_integrals(n, p)
        scale = sp_ + sm
        assert abs(sp_ - 2.0 * up) <= 1e-13 * scale
        assert abs(sm - 2.0 * um) <= 1e-13 * scale

    def test_odd_degree_partition_includes_origin(self):
        sp_, sm, _ = symmetric_lp_integrals(3, 1.0)
        # odd polynomial: the two parts coincide on [-1, 1]
        assert sp_ == pytest.approx(sm, rel=1e-12)


class TestNormRatio:
    def test_closed_form_degree_two(self):
        exact_plus, exact_minus = exact_split_integrals(2, 2)
        report = norm_ratio(2, 2.0)
        assert report.norm_ratio == pytest.approx(
            math.sqrt(exact_plus / exact_minus), rel=1e-12
        )

    def test_ratio_exceeds_one_for_p6(self):
        assert norm_ratio(4, 6.0).norm_ratio > 1.0

    def test_requires_both_parts(self):
        with pytest.raises(DomainError):
            norm_ratio(1, 6.0)

    def test_csv_header(self):
        report = norm_ratio(4, 6.0)
        assert report.csv_header() == "n,p,integral_plus,integral_minus,norm_ratio,quad_error"
        row, = report.csv_rows()
        assert row[0] == 4 and row[1] == 6.0


class TestClosedFormBounds:
    def test_triangle_values(self):
        assert triangle_lower_bound(1, 1.0) == pytest.approx(0.5)
        assert triangle_lower_bound(4, 6.0) == pytest.approx(1.0 / 70.0)
        assert triangle_lower_bound(100, 6.0) == pytest.approx(2.0 / (7 * 100 * 101))

    def test_triangle_equality_for_linear(self):
        # P_1 = x meets the bound exactly: integral of x^p over [0,1]
        arch = arch_integral_above_largest_zero(1, 1.0)
        assert arch == pytest.approx(triangle_lower_bound(1, 1.0), abs=1e-13)

    def test_arch_dominates_triangle_bound(self):
        for n in (4, 37, 100):
            for p in (1.0, 2.0, 6.0):
                arch = arch_integral_above_largest_zero(n, p)
                assert arch + 1e-12 >= triangle_lower_bound(n, p)

    def test_positive_part_bound_values(self):
        assert positive_part_lower_bound(1, 6.0) == pytest.approx(1.0 / 70.0)
        assert positive_part_lower_bound(2, 6.0) == pytest.approx(1.0 / 252.0)
        assert positive_part_lower_bound(50, 6.0) == pytest.approx(
            1.0 / (2 * 7 * 50 * 201)
        )

    def test_darboux_degree_four(self):
        y1 = legendre_extrema(4).extrema[0].y_value
        expected = 3.0 * math.pi**2 / 4.5**2 * y1**6
        assert darboux_upper_bound(1, 6.0) == pytest.approx(expected, rel=1e-12)
        _, i_minus, _ = signed_lp_integrals(4, 6.0)
        assert i_minus <= expected

    def test_darboux_degree_eight(self):
        table = legendre_extrema(8)
        y1, y3 = table.extrema[0].y_value, table.extrema[2].y_value
        expected = 3.0 * math.pi**2 / 8.5**2 * (y1**6 + 2.0 * y3**6)
        assert darboux_upper_bound(2, 6.0) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("q", [1, 2, 5, 10])
    @pytest.mark.parametrize("p", [4.5, 6.0, 8.0])
    def test_sandwich(self, q, p):
        i_plus, i_minus, _ = signed_lp_integrals(4 * q, p)
        assert i_plus > positive_part_lower_bound(q, p)
        assert i_minus < darboux_upper_bound(q, p)

    def test_bound_domains(self):
        with pytest.raises(DomainError):
            triangle_lower_bound(0, 1.0)
        with pytest.raises(DomainError):
            positive_part_lower_bound(1, -1.0)
        with pytest.raises(DomainError):
            darboux_upper_bound(0, 6.0)
