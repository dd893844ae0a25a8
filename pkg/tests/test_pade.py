import math
import random

import pytest

from seqaccel import (
    DegeneratePadeError,
    InvalidParameterError,
    PowerSeries,
    order_condition_residuals,
    pade_direct,
    pade_label,
    pade_via_epsilon,
    staircase_sequence,
)
from _helpers import rel_diff


def exp_series(count, z=1.0):
    return PowerSeries(tuple(1.0 / math.factorial(k) for k in range(count)), z)


class TestPadeDirect:
    def test_one_one_of_exp(self):
        approximant = pade_direct(exp_series(3), 1, 1)
        assert approximant.numerator == pytest.approx((1.0, 0.5))
        assert approximant.denominator == pytest.approx((1.0, -0.5))
        assert approximant(1.0) == pytest.approx(3.0)

    def test_zero_zero_is_leading_coefficient(self):
        series = PowerSeries((4.0, 1.0, 7.0), 0.2)
        approximant = pade_direct(series, 0, 0)
        assert approximant.numerator == (4.0,)
        assert approximant.denominator == (1.0,)

    def test_geometric_series_is_reproduced_exactly(self):
        approximant = pade_direct(PowerSeries((1.0, 1.0, 1.0), 0.3), 0, 1)
        assert approximant.denominator == pytest.approx((1.0, -1.0))
        assert approximant(0.3) == pytest.approx(1.0 / 0.7)

    def test_degenerate_table_block_detected(self):
        # geometric coefficients make the [1/2] system singular
        with pytest.raises(DegeneratePadeError):
            pade_direct(PowerSeries((1.0, 1.0, 1.0, 1.0), 0.5), 1, 2)

    def test_needs_enough_coefficients(self):
        with pytest.raises(InvalidParameterError):
            pade_direct(exp_series(3), 2, 2)
        with pytest.raises(InvalidParameterError):
            pade_direct(exp_series(3), -1, 1)

    @pytest.mark.parametrize("seed", range(8))
    def test_order_conditions_hold(self, seed):
        rng = random.Random(seed)
        coeffs = tuple(rng.uniform(-1, 1) for _ in range(rng.randint(5, 9)))
        series = PowerSeries(coeffs, 0.3)
        scale = max(abs(c) for c in coeffs)
        for l in range(4):
            for m in range(4):
                if l + m > series.order:
                    continue
                try:
                    approximant = pade_direct(series, l, m)
                except DegeneratePadeError:
                    continue
                residuals = order_condition_residuals(approximant, series)
                assert max(abs(r) for r in residuals) <= 1e-12 * scale


class TestPadeViaEpsilon:
    def test_gauge_column_is_partial_sums(self):
        series = exp_series(4, z=0.5)
        table = pade_via_epsilon(series)
        assert [v for _, v, _ in table.column(0)] == pytest.approx(series.partial_sums())

    def test_label_mapping(self):
        assert pade_label(2, 0) == (1, 1)
        assert pade_label(4, 3) == (5, 2)
        with pytest.raises(InvalidParameterError):
            pade_label(3, 0)

    @pytest.mark.parametrize("seed", range(6))
    def test_agrees_with_direct_solver(self, seed):
        rng = random.Random(seed)
        coeffs = tuple(rng.uniform(-1, 1) for _ in range(rng.randint(6, 9)))
        series = PowerSeries(coeffs, rng.uniform(-0.5, 0.5))
        table = pade_via_epsilon(series)
        for k in table.approximant_orders():
            for n, value, ok in table.column(k):
                if not ok:
                    continue
                l, m = pade_label(k, n)
                try:
                    direct = pade_direct(series, l, m)(series.z)
                except DegeneratePadeError:
                    continue
                assert rel_diff(value, direct) < 1e-10


class TestStaircase:
    def test_three_sums_give_first_three_approximants(self):
        labels = [(l, m) for l, m, _ in staircase_sequence(exp_series(3))]
        assert labels == [(0, 0), (1, 0), (1, 1)]

    def test_exp_staircase_ends_at_diagonal_two_two(self):
        entries = staircase_sequence(exp_series(5))
        assert [(l, m) for l, m, _ in entries] == [
            (0, 0), (1, 0), (1, 1), (2, 1), (2, 2),
        ]
        direct = pade_direct(exp_series(5), 2, 2)(1.0)
        assert entries[-1][2] == pytest.approx(direct)
        assert direct == pytest.approx(19.0 / 7.0)

    def test_invalid_entries_are_marked(self):
        # constant partial sums trip the epsilon guard immediately
        series = PowerSeries((1.0, 0.0, 0.0, 0.0), 0.5)
        entries = staircase_sequence(series)
        assert entries[0][2] == 1.0
        assert any(value is None for _, _, value in entries[1:])
