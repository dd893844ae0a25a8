import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from seqaccel import (
    SequenceSample,
    SingularStepError,
    InsufficientDataError,
    aitken_step,
    brezinski_theta,
    iterated_aitken,
    iterated_theta,
    make_partial_sums,
    wynn_epsilon,
)
from _helpers import rel_diff


def theta2_closed_form(s, n):
    """Independent single-entry evaluation of the theta_2 expression."""
    d = [s[i + 1] - s[i] for i in range(len(s) - 1)]
    dd = [d[i + 1] - d[i] for i in range(len(d) - 1)]
    return s[n + 1] - d[n] * d[n + 1] * dd[n + 1] / (
        d[n + 2] * dd[n] - d[n] * dd[n + 1]
    )


def random_values(seed, count, lo=0.25, hi=1.75):
    rng = random.Random(seed)
    return tuple(rng.uniform(lo, hi) for _ in range(count))


class TestAitkenStep:
    def test_exact_on_geometric(self):
        # s_n = 1 + 2^-n
        assert aitken_step(2.0, 1.5, 1.25) == pytest.approx(1.0)

    def test_arithmetic_progression_is_singular(self):
        with pytest.raises(SingularStepError):
            aitken_step(0.0, 1.0, 2.0)

    def test_ln2_partial_sums(self):
        assert aitken_step(1.0, 0.5, 0.8333333333333333) == pytest.approx(0.7)


class TestIteratedAitken:
    def test_single_exponential_exact(self):
        vals = tuple(1.0 + 2.0 ** -n for n in range(3))
        table = iterated_aitken(SequenceSample(vals))
        assert table.entry(1, 0) == pytest.approx(1.0, abs=1e-12)

    def test_accelerates_two_exponentials_along_column(self):
        # not exact for two exponential terms (that is the epsilon algorithm's
        # model), but the second column still beats the raw tail clearly
        vals = tuple(5.0 + 2.0 * 0.7 ** n + 0.3 ** n for n in range(9))
        table = iterated_aitken(SequenceSample(vals))
        raw_err = abs(vals[-1] - 5.0)
        assert abs(table.entry(2, 4) - 5.0) < raw_err / 100

    def test_constant_sequence_flags_singular_column(self):
        table = iterated_aitken(SequenceSample((7.0, 7.0, 7.0)))
        assert not table.is_valid(1, 0)
        assert table.entry(0, 1) == 7.0

    def test_needs_three_elements(self):
        with pytest.raises(InsufficientDataError):
            iterated_aitken(SequenceSample((1.0, 2.0)))

    def test_column_lengths(self):
        table = iterated_aitken(SequenceSample(random_values(0, 9)))
        assert [len(c) for c in table.columns] == [9, 7, 5, 3, 1]
        assert table.consumed(2, 0) == 5


class TestWynnEpsilon:
    def test_exp_partial_sums_give_one_one_pade(self):
        table = wynn_epsilon(SequenceSample((1.0, 2.0, 2.5)))
        assert table.entry(2, 0) == pytest.approx(3.0)

    def test_even_columns_are_approximants(self):
        table = wynn_epsilon(SequenceSample(random_values(1, 7)))
        assert table.order_step == 2
        assert table.approximant_orders() == [0, 2, 4, 6]

    def test_exact_on_geometric_along_column(self):
        vals = tuple(-2.0 + 0.4 ** n for n in range(6))
        table = wynn_epsilon(SequenceSample(vals))
        for n, value, ok in table.column(2):
            assert ok and value == pytest.approx(-2.0, abs=1e-12)

    def test_matches_aitken_everywhere(self):
        vals = random_values(2, 10)
        eps = wynn_epsilon(SequenceSample(vals))
        ait = iterated_aitken(SequenceSample(vals))
        for n in range(len(vals) - 2):
            assert rel_diff(eps.entry(2, n), ait.entry(1, n)) < 1e-12

    def test_exact_on_two_exponentials(self):
        vals = tuple(5.0 + 3.0 * 2.0 ** -n + (-4.0) ** -n for n in range(5))
        table = wynn_epsilon(SequenceSample(vals))
        assert table.entry(4, 0) == pytest.approx(5.0, abs=1e-9)

    def test_complex_sequences_pass_through(self):
        # the summed geometric series of a complex ratio
        lam = 0.4 + 0.3j
        limit = 1.0 / (1.0 - lam)
        sample = make_partial_sums([lam ** k for k in range(6)])
        table = wynn_epsilon(sample)
        assert table.entry(2, 0) == pytest.approx(limit, abs=1e-12)


class TestBrezinskiTheta:
    def test_inverse_square_partial_sums(self):
        sample = make_partial_sums([(nu + 1.0) ** -2 for nu in range(4)])
        table = brezinski_theta(SequenceSample(sample.values))
        # hand evaluation of the closed form; true limit pi^2/6 = 1.6449...
        assert table.entry(2, 0) == pytest.approx(1.6388888888888888, abs=1e-12)

    @pytest.mark.parametrize("seed", range(6))
    def test_recursion_matches_closed_form(self, seed):
        vals = random_values(seed, 9)
        table = brezinski_theta(SequenceSample(vals))
        for n, value, ok in table.column(2):
            if ok:
                assert rel_diff(value, theta2_closed_form(vals, n)) < 1e-12

    def test_exact_on_geometric(self):
        vals = tuple(1.5 - 0.8 * (-0.7) ** n for n in range(6))
        table = brezinski_theta(SequenceSample(vals))
        assert table.entry(2, 0) == pytest.approx(1.5, abs=1e-10)

    def test_column_lengths_consume_three_per_even_step(self):
        table = brezinski_theta(SequenceSample(random_values(3, 10)))
        assert len(table.columns[0]) == 10
        assert len(table.columns[2]) == 7
        assert len(table.columns[4]) == 4
        assert table.consumed(4, 0) == 7


class TestIteratedTheta:
    def test_first_column_is_theta2(self):
        vals = random_values(4, 10)
        theta = brezinski_theta(SequenceSample(vals))
        itth = iterated_theta(SequenceSample(vals))
        for n, value, ok in itth.column(1):
            if ok and theta.is_valid(2, n):
                assert rel_diff(value, theta.entry(2, n)) < 1e-13

    def test_accelerates_logarithmic_zeta2(self):
        sample = make_partial_sums([(nu + 1.0) ** -2 for nu in range(10)])
        limit = math.pi ** 2 / 6
        table = iterated_theta(SequenceSample(sample.values))
        raw_err = abs(sample.values[-1] - limit)
        assert abs(table.entry(3, 0) - limit) < raw_err / 1e3

    def test_constant_sequence_invalid_beyond_column_zero(self):
        table = iterated_theta(SequenceSample((3.0,) * 5))
        assert all(not ok for _, _, ok in table.column(1))

    def test_needs_four_elements(self):
        with pytest.raises(InsufficientDataError):
            iterated_theta(SequenceSample((1.0, 2.0, 3.0)))


class TestCovariance:
    """Translation and scaling behavior shared by the whole family."""

    @given(
        st.floats(-25, 25).filter(lambda c: abs(c) > 1e-3),
        st.integers(0, 2 ** 31 - 1),
    )
    @settings(max_examples=40, deadline=None)
    def test_translation(self, shift, seed):
        vals = random_values(seed, 8)
        shifted = tuple(v + shift for v in vals)
        for build, orders in (
            (iterated_aitken, (1, 2)),
            (wynn_epsilon, (2, 4)),
            (brezinski_theta, (2,)),
            (iterated_theta, (1, 2)),
        ):
            base = build(SequenceSample(vals))
            moved = build(SequenceSample(shifted))
            for k in orders:
                for n, value, ok in base.column(k):
                    if ok and moved.is_valid(k, n):
                        assert abs(moved.entry(k, n) - (value + shift)) < 1e-8 * max(
                            1.0, abs(shift)
                        )

    @given(
        st.floats(-8, 8).filter(lambda c: abs(c) > 0.1),
        st.integers(0, 2 ** 31 - 1),
    )
    @settings(max_examples=40, deadline=None)
    def test_scaling(self, scale, seed):
        vals = random_values(seed, 8)
        scaled = tuple(v * scale for v in vals)
        for build, orders in ((wynn_epsilon, (2, 4)), (iterated_theta, (1,))):
            base = build(SequenceSample(vals))
            moved = build(SequenceSample(scaled))
            for k in orders:
                for n, value, ok in base.column(k):
                    if ok and moved.is_valid(k, n):
                        assert rel_diff(moved.entry(k, n), value * scale) < 1e-8
