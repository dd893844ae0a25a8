import math
import random

import mpmath
import pytest

from seqaccel import (
    InsufficientDataError,
    InterpolationPoints,
    InvalidParameterError,
    SequenceSample,
    bdg_transform,
    estimate_decay,
    iterated_rho,
    iterated_rho_standard,
    make_partial_sums,
    median_last_quartile,
    natural_points,
    neville_richardson,
    osada_rho,
    reciprocal_points,
    richardson_binomial,
    richardson_standard,
    rho_standard,
    wynn_rho,
)
from _helpers import error_slope, rel_diff, table_rel_spread

PI2_6 = math.pi ** 2 / 6


def random_values(seed, count):
    rng = random.Random(seed)
    return tuple(rng.uniform(0.25, 1.75) for _ in range(count))


class TestInterpolationPoints:
    def test_direction_validation(self):
        with pytest.raises(InvalidParameterError):
            InterpolationPoints((1.0, 2.0), "to_zero")
        with pytest.raises(InvalidParameterError):
            InterpolationPoints((2.0, 1.0), "to_infinity")
        with pytest.raises(InvalidParameterError):
            InterpolationPoints((1.0, 1.0), "to_zero")
        with pytest.raises(InvalidParameterError):
            InterpolationPoints((0.0, 1.0), "to_infinity")
        with pytest.raises(InvalidParameterError):
            InterpolationPoints((1.0,), "sideways")

    def test_standard_grids(self):
        assert reciprocal_points(3).x == pytest.approx((1.0, 0.5, 1 / 3))
        assert natural_points(3).x == (1.0, 2.0, 3.0)


class TestNevilleRichardson:
    def test_exact_for_degree_one(self):
        # s_n = x_n with x_n = 1/(n+1): value at x=0 is 0
        points = reciprocal_points(5)
        vals = points.x
        table = neville_richardson(SequenceSample(vals), points)
        assert table.entry(1, 0) == pytest.approx(0.0, abs=1e-15)

    def test_constant_sequence(self):
        points = reciprocal_points(4)
        table = neville_richardson(SequenceSample((2.5,) * 4), points)
        for k, n, value, ok in ((1, 0, 2.5, True), (3, 0, 2.5, True)):
            assert table.is_valid(k, n) == ok
            assert table.entry(k, n) == pytest.approx(value)

    def test_exact_for_degree_two_polynomial(self):
        points = reciprocal_points(6)
        vals = tuple(x * x + 2 * x + 5 for x in points.x)
        table = neville_richardson(SequenceSample(vals), points)
        assert table.entry(2, 0) == pytest.approx(5.0, abs=1e-12)

    def test_requires_matching_direction_and_length(self):
        with pytest.raises(InvalidParameterError):
            neville_richardson(SequenceSample((1.0, 2.0)), natural_points(2))
        with pytest.raises(InvalidParameterError):
            neville_richardson(SequenceSample((1.0, 2.0, 3.0)), reciprocal_points(2))


class TestRichardsonStandard:
    def test_exact_for_integer_alpha_one(self):
        # s_n = s + c/(n+beta), beta = 1
        vals = tuple(2.0 + 3.0 / (n + 1.0) for n in range(6))
        table = richardson_standard(SequenceSample(vals), beta=1.0)
        for n, value, ok in table.column(1):
            assert ok and value == pytest.approx(2.0, abs=1e-12)

    @pytest.mark.parametrize("seed", range(5))
    def test_recursion_matches_binomial_form(self, seed):
        vals = random_values(seed, 8)
        table = richardson_standard(SequenceSample(vals), beta=1.5)
        for k in range(table.max_order + 1):
            for n, value, ok in table.column(k):
                assert ok
                assert rel_diff(value, richardson_binomial(vals, 1.5, k, n)) < 1e-12

    def test_fails_for_nonintegral_alpha(self):
        # s_n = (n+1)^(-1/2): limit 0, alpha = 1/2 breaks the polynomial model
        vals = tuple((n + 1.0) ** -0.5 for n in range(4))
        table = richardson_standard(SequenceSample(vals), beta=1.0)
        assert abs(table.entry(3, 0)) > abs(vals[3]) / 10

    def test_beta_must_be_positive(self):
        with pytest.raises(InvalidParameterError):
            richardson_standard(SequenceSample((1.0, 2.0)), beta=0.0)


class TestWynnRho:
    def test_exact_for_one_one_rational(self):
        vals = tuple(1.0 + 1.0 / (n + 1) for n in range(8))
        table = wynn_rho(SequenceSample(vals), natural_points(8))
        for n, value, ok in table.column(2):
            assert ok and value == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("seed", range(5))
    def test_natural_points_reduce_to_standard_form(self, seed):
        vals = random_values(seed, 9)
        general = wynn_rho(SequenceSample(vals), natural_points(9))
        standard = rho_standard(SequenceSample(vals))
        assert table_rel_spread(general, standard) < 1e-12

    def test_does_not_accelerate_linear_convergence(self):
        vals = tuple(1.0 + 2.0 ** -n for n in range(12))
        table = rho_standard(SequenceSample(vals))
        raw_err = abs(vals[-1] - 1.0)
        best = min(
            abs(value - 1.0)
            for k in table.approximant_orders()[1:]
            for _, value, ok in table.column(k)
            if ok
        )
        assert best > raw_err / 10

    def test_no_divergent_summation(self):
        # alternating divergent: s_n = 1/3 + (2/3) (-2)^n, antilimit 1/3
        vals = tuple(1.0 / 3.0 + (2.0 / 3.0) * (-2.0) ** n for n in range(12))
        table = rho_standard(SequenceSample(vals))
        closest = min(
            abs(value - 1.0 / 3.0)
            for k in table.approximant_orders()
            for _, value, ok in table.column(k)
            if ok
        )
        assert closest > 1e-2


class TestRhoOnZeta2:
    """Recorded desk runs on the inverse-square partial sums (limit pi^2/6)."""

    @pytest.fixture()
    def sums(self):
        return make_partial_sums([(nu + 1.0) ** -2 for nu in range(9)]).values

    def test_rho4_recorded_error(self, sums):
        table = rho_standard(SequenceSample(sums))
        assert abs(table.entry(4, 0) - PI2_6) == pytest.approx(3.9171953329e-05, rel=1e-5)

    def test_deeper_column_keeps_improving(self, sums):
        table = rho_standard(SequenceSample(sums))
        assert abs(table.entry(8, 0) - PI2_6) < 1e-8

    def test_iterated_rho_recorded_error(self, sums):
        table = iterated_rho_standard(SequenceSample(sums))
        assert abs(table.entry(2, 0) - PI2_6) == pytest.approx(3.2671946832e-05, rel=1e-5)
        assert abs(table.entry(4, 0) - PI2_6) < 1e-8


class TestIteratedRho:
    def test_first_column_is_rho2(self):
        vals = random_values(7, 9)
        points = natural_points(9)
        rho = wynn_rho(SequenceSample(vals), points)
        itr = iterated_rho(SequenceSample(vals), points)
        for n, value, ok in itr.column(1):
            if ok and rho.is_valid(2, n):
                assert rel_diff(value, rho.entry(2, n)) < 1e-12

    @pytest.mark.parametrize("seed", range(5))
    def test_natural_points_match_standard_form(self, seed):
        vals = random_values(seed, 9)
        general = iterated_rho(SequenceSample(vals), natural_points(9))
        standard = iterated_rho_standard(SequenceSample(vals))
        assert table_rel_spread(general, standard) < 1e-12


class TestOsadaRho:
    def test_recorded_value_for_inverse_sqrt(self):
        # alpha = 1/2 on (1, 1/sqrt2, 1/sqrt3); limit 0
        vals = (1.0, 1.0 / math.sqrt(2.0), 1.0 / math.sqrt(3.0))
        table = osada_rho(SequenceSample(vals), alpha=0.5)
        assert table.entry(2, 0) == pytest.approx(0.008218041752945094, rel=1e-10)

    @pytest.mark.parametrize("seed", range(5))
    def test_alpha_one_is_standard_rho(self, seed):
        vals = random_values(seed, 9)
        assert table_rel_spread(
            osada_rho(SequenceSample(vals), alpha=1.0),
            rho_standard(SequenceSample(vals)),
        ) < 1e-12

    def test_alpha_validation(self):
        with pytest.raises(InvalidParameterError):
            osada_rho(SequenceSample((1.0, 2.0, 3.0)), alpha=0.0)

    def test_error_slope_first_order(self):
        # alpha = 0.7 decay: |rho_bar_2^(n)| falls like n^(-alpha-2)
        alpha = 0.7
        vals = tuple((n + 1.0) ** -alpha for n in range(66))
        table = osada_rho(SequenceSample(vals), alpha=alpha)
        slope = error_slope(table, 2, 0.0, 20, 60, shift=1.0)
        assert slope == pytest.approx(-(alpha + 2.0), abs=0.2)


class TestBdgTransform:
    @pytest.mark.parametrize("alpha", (0.4, 0.7, 1.3))
    def test_first_column_is_osada_rho2(self, alpha):
        vals = random_values(17, 9)
        bdg = bdg_transform(SequenceSample(vals), alpha=alpha)
        osa = osada_rho(SequenceSample(vals), alpha=alpha)
        for n, value, ok in bdg.column(1):
            if ok and osa.is_valid(2, n):
                assert rel_diff(value, osa.entry(2, n)) < 1e-12

    def test_exact_for_alpha_one_pure_decay(self):
        vals = tuple(2.5 - 3.0 / (n + 1.0) for n in range(8))
        table = bdg_transform(SequenceSample(vals), alpha=1.0)
        for n, value, ok in table.column(1):
            assert ok and value == pytest.approx(2.5, abs=1e-10)

    def test_alpha_validation(self):
        with pytest.raises(InvalidParameterError):
            bdg_transform(SequenceSample((1.0, 2.0, 3.0)), alpha=-1.0)


@pytest.fixture(scope="module")
def tables():
    mpmath.mp.dps = 50
    alpha = mpmath.mpf("0.6")
    beta = mpmath.mpf(1)
    limit = mpmath.mpf(3)
    vals = tuple(
        limit + (n + beta) ** (-alpha) * (2 + mpmath.mpf("-0.7") / (n + beta))
        for n in range(811)
    )
    sample = SequenceSample(vals)
    return (
        float(alpha),
        limit,
        osada_rho(sample, alpha=alpha),
        bdg_transform(sample, alpha=alpha),
    )


class TestErrorOrderProperty:
    """Asymptotic transformation error n^(-alpha-2k) for known alpha.

    Measured at 50-digit precision over n in [200, 800]: the window must
    sit in the asymptotic regime, and double precision cannot resolve the
    k=2 errors there (they fall below the rounding floor of the input).
    """

    @pytest.mark.parametrize("k", (1, 2))
    def test_osada_error_order(self, tables, k):
        alpha, limit, osa, _ = tables
        slope = error_slope(osa, 2 * k, limit, 200, 800, step=10)
        assert slope == pytest.approx(-(alpha + 2 * k), abs=0.1)

    @pytest.mark.parametrize("k", (1, 2))
    def test_bdg_error_order(self, tables, k):
        alpha, limit, _, bdg = tables
        slope = error_slope(bdg, k, limit, 200, 800, step=10)
        assert slope == pytest.approx(-(alpha + 2 * k), abs=0.1)


class TestEstimateDecay:
    def test_exact_for_alpha_one(self):
        vals = tuple((n + 1.0) ** -1 for n in range(34))
        estimates = estimate_decay(SequenceSample(vals))
        assert 0.999 <= estimates[30] <= 1.001

    def test_alpha_half_at_n50(self):
        vals = tuple((n + 1.0) ** -0.5 for n in range(55))
        estimates = estimate_decay(SequenceSample(vals))
        assert estimates[50] == pytest.approx(0.5, abs=1e-3)

    def test_constant_sequence_all_invalid(self):
        estimates = estimate_decay(SequenceSample((4.0,) * 8))
        assert estimates == [None] * 5

    def test_needs_four_elements(self):
        with pytest.raises(InsufficientDataError):
            estimate_decay(SequenceSample((1.0, 2.0, 3.0)))

    def test_median_last_quartile(self):
        # last quartile of 12 entries is the final 3
        estimates = [float(i) for i in range(9)] + [4.0, None, 8.0]
        assert median_last_quartile(estimates) == 6.0
        with pytest.raises(InsufficientDataError):
            median_last_quartile([1.0, None, None, None])
