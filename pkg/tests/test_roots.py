"""Zero/extremum tables: bracket certificates, residuals, interlacing."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from lpzonal import (
    DegreeCapError,
    DomainError,
    bruns_bracket,
    check_interlacing,
    eval_legendre_derivative,
    extremum_magnitude,
    largest_zero,
    legendre_extrema,
    legendre_zeros,
)

# plotted zero/extremum coordinates for P_4 and P_8, printed to 3-4
# decimals, hence the 5e-4 comparison tolerance
FIGURE_TOL = 5e-4
P4_ZEROS = (0.861, 0.34)
P8_ZEROS = (0.9603, 0.7967, 0.5255, 0.1834)
P4_Y1 = 0.429
P8_Y1, P8_Y3 = 0.4097, 0.2832


class TestBrunsBracket:
    def test_orientation_and_containment_for_p2(self):
        lo, hi = bruns_bracket(1, 2)
        assert lo == pytest.approx(math.cos(2 * math.pi / 5), abs=1e-15)
        assert hi == pytest.approx(math.cos(math.pi / 5), abs=1e-15)
        assert lo < 1.0 / math.sqrt(3.0) < hi

    def test_contains_plotted_zeros(self):
        lo, hi = bruns_bracket(1, 4)
        assert lo < 0.861 < hi
        lo, hi = bruns_bracket(2, 8)
        assert lo < 0.7967 < hi

    def test_index_errors(self):
        with pytest.raises(DomainError):
            bruns_bracket(0, 4)
        with pytest.raises(DomainError):
            bruns_bracket(3, 4)

    @given(st.integers(min_value=2, max_value=500), st.data())
    @settings(max_examples=60, deadline=None)
    def test_every_zero_sits_inside_its_bracket(self, n, data):
        i = data.draw(st.integers(min_value=1, max_value=n // 2))
        lo, hi = bruns_bracket(i, n)
        z = legendre_zeros(n).zeros[i - 1].value
        assert lo < z < hi


class TestZeros:
    def test_p2_closed_form(self):
        table = legendre_zeros(2)
        assert len(table.zeros) == 1
        assert abs(table.zeros[0].value - 1.0 / math.sqrt(3.0)) < 1e-13

    def test_figure_coordinates(self):
        np.testing.assert_allclose(legendre_zeros(4).values, P4_ZEROS, atol=FIGURE_TOL)
        np.testing.assert_allclose(legendre_zeros(8).values, P8_ZEROS, atol=FIGURE_TOL)

    def test_counts_and_order(self):
        for n in (1, 2, 3, 8, 9, 40, 41):
            values = legendre_zeros(n).values
            assert len(values) == n // 2
            assert np.all(np.diff(values) < 0)  # z_1 > z_2 > ...
            assert np.all(values > 0)

    def test_residual_certificates(self):
        for n in (5, 32, 150):
            table = legendre_zeros(n)
            slopes = np.abs(eval_legendre_derivative(n, table.values))
            for rec, slope in zip(table.zeros, slopes):
                assert rec.bracket_lo < rec.value < rec.bracket_hi
                assert rec.residual <= 1e-12 * max(1.0, slope)

    def test_against_scipy_gauss_nodes(self):
        for n in (10, 151, 400):
            mine = legendre_zeros(n).values
            nodes = np.sort(special.roots_legendre(n)[0])
            ref = nodes[nodes > 1e-12][::-1]
            np.testing.assert_allclose(mine, ref, atol=5e-14)

    def test_largest_zero(self):
        assert largest_zero(1) == 0.0
        assert largest_zero(4) == legendre_zeros(4).zeros[0].value

    def test_cap_error(self):
        with pytest.raises(DegreeCapError):
            legendre_zeros(21, degree_cap=20)

    def test_csv_rows(self):
        table = legendre_zeros(4)
        assert table.csv_header() == "n,i,value,bracket_lo,bracket_hi,residual"
        rows = list(table.csv_rows())
        assert rows[0][0] == 4 and rows[0][1] == 1


class TestExtrema:
    def test_p3_closed_form(self):
        # P'_3 = (15x^2 - 3)/2 vanishes at 1/sqrt(5); |P_3| there is 1/sqrt(5)
        table = legendre_extrema(3)
        assert len(table.extrema) == 1
        rec = table.extrema[0]
        assert abs(rec.x_value - 1.0 / math.sqrt(5.0)) < 1e-13
        assert abs(rec.y_value - 1.0 / math.sqrt(5.0)) < 1e-13
        assert rec.sign == -1

    def test_figure_magnitudes(self):
        assert abs(legendre_extrema(4).extrema[0].y_value - P4_Y1) < FIGURE_TOL
        table = legendre_extrema(8)
        assert abs(table.extrema[0].y_value - P8_Y1) < FIGURE_TOL
        assert abs(table.extrema[2].y_value - P8_Y3) < FIGURE_TOL

    def test_counts(self):
        assert legendre_extrema(2).extrema == ()
        for n in (3, 4, 9, 40, 41):
            assert len(legendre_extrema(n).extrema) == (n - 1) // 2

    def test_sign_alternation(self):
        for n in (4, 9, 31, 100):
            signs = [e.sign for e in legendre_extrema(n).extrema]
            assert signs[0] == -1
            assert all(a * b == -1 for a, b in zip(signs, signs[1:]))

    def test_residuals(self):
        for n in (4, 25, 120):
            for rec in legendre_extrema(n).extrema:
                assert rec.residual <= 1e-10 * n * n

    def test_per_index_solver_matches_table(self):
        for n in (5, 8, 33):
            for rec in legendre_extrema(n).extrema:
                assert extremum_magnitude(rec.index, n) == pytest.approx(
                    rec.y_value, abs=1e-14
                )

    def test_magnitude_decreasing_in_degree(self):
        # fixed index, increasing degree: y_{i,n+1} <= y_{i,n} + 1e-12
        for i in (1, 2, 3):
            ys = [extremum_magnitude(i, n) for n in range(2 * i + 1, 2 * i + 30)]
            assert all(b <= a + 1e-12 for a, b in zip(ys, ys[1:]))

    def test_index_errors(self):
        with pytest.raises(DomainError):
            extremum_magnitude(2, 4)  # P_4 has a single positive extremum
        with pytest.raises(DomainError):
            legendre_extrema(1)


class TestInterlacing:
    def test_p4_margins(self):
        report = check_interlacing(4)
        assert report.satisfied
        (i, lower, upper), = report.margins
        x1 = math.sqrt(3.0 / 7.0)
        zs = legendre_zeros(4).values
        assert i == 1
        assert lower == pytest.approx(x1 - zs[1], abs=1e-12)
        assert upper == pytest.approx(zs[0] - x1, abs=1e-12)

    def test_p8_and_odd_degree(self):
        assert check_interlacing(8).satisfied
        assert check_interlacing(9).satisfied

    def test_trivial_for_p2(self):
        report = check_interlacing(2)
        assert report.satisfied and report.margins == ()

    def test_sweep(self):
        for n in range(2, 60):
            assert check_interlacing(n).satisfied
