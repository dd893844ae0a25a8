"""Pade approximants: direct linear-system construction and extraction
from the epsilon table.

``pade_direct`` solves the order conditions for [l/m] with partial
pivoting and is the oracle; ``pade_via_epsilon`` reads the same numbers
off Wynn's epsilon algorithm applied to the partial sums, entry
``eps_{2k}^(n)`` being [n+k/k] evaluated at z.  The staircase
[0/0], [1/0], [1/1], [2/1], ... spends each new series coefficient at the
highest approximant order available.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classic import wynn_epsilon
from .core import GuardPolicy, Scalar, SequenceSample, TransformTable
from .errors import DegeneratePadeError, InvalidParameterError, SingularMatrixError
from .linalg import solve_dense

_PIVOT_RTOL = 1e-13


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients gamma_0..gamma_N of a (formal) power series and a point z."""

    coefficients: tuple
    z: Scalar

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if not self.coefficients:
            raise InvalidParameterError("a power series needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def partial_sums(self) -> list:
        out = []
        acc = 0.0
        zp = 1.0
        for g in self.coefficients:
            acc = acc + g * zp
            zp = zp * self.z
            out.append(acc)
        return out

    def sample(self) -> SequenceSample:
        sums = self.partial_sums()
        terms = [sums[0]] + [sums[i] - sums[i - 1] for i in range(1, len(sums))]
        return SequenceSample(tuple(sums), terms=tuple(terms))


def _polyval(coeffs, z):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


@dataclass(frozen=True)
class PadeApproximant:
    """The rational function [l/m] = P_l / Q_m with Q normalized to Q(0) = 1."""

    l: int
    m: int
    numerator: tuple
    denominator: tuple

    def __call__(self, z: Scalar) -> Scalar:
        return _polyval(self.numerator, z) / _polyval(self.denominator, z)


def pade_direct(series: PowerSeries, l: int, m: int) -> PadeApproximant:
    """Solve the [l/m] order conditions directly.

    The Taylor expansion of P_l/Q_m matches the series through order
    l+m.  A singular system signals a block in the Pade table and raises
    ``DegeneratePadeError``.
    """
    if l < 0 or m < 0:
        raise InvalidParameterError("numerator and denominator degrees must be >= 0")
    g = series.coefficients
    if l + m > series.order:
        raise InvalidParameterError(
            f"[{l}/{m}] needs {l + m + 1} coefficients, series has {series.order + 1}"
        )

    def gamma(i: int) -> Scalar:
        return g[i] if i >= 0 else 0.0

    if m == 0:
        q = (1.0,)
    else:
        matrix = [[gamma(l + 1 + r - c) for c in range(1, m + 1)] for r in range(m)]
        rhs = [-gamma(l + 1 + r) for r in range(m)]
        try:
            solution = solve_dense(matrix, rhs, pivot_rtol=_PIVOT_RTOL)
        except SingularMatrixError as exc:
            raise DegeneratePadeError(
                f"[{l}/{m}] order conditions are singular: {exc}"
            ) from exc
        q = (1.0, *solution)
    p = tuple(
        sum(q[i] * gamma(j - i) for i in range(min(j, m) + 1))
        for j in range(l + 1)
    )
    return PadeApproximant(l, m, p, q)


def order_condition_residuals(approximant: PadeApproximant, series: PowerSeries) -> list:
    """Coefficients of ``Q_m * f - P_l`` through order l+m (ideally zero)."""
    g = series.coefficients
    l, m = approximant.l, approximant.m
    q, p = approximant.denominator, approximant.numerator
    out = []
    for i in range(l + m + 1):
        acc = sum(q[t] * g[i - t] for t in range(min(i, m) + 1))
        if i <= l:
            acc = acc - p[i]
        out.append(acc)
    return out


def pade_via_epsilon(series: PowerSeries, guard: Optional[GuardPolicy] = None) -> TransformTable:
    """Run the epsilon algorithm on the partial sums of the series.

    The even entry (2k, n) of the returned table is the value of [n+k/k]
    at ``series.z``; use ``pade_label`` to translate indices.
    """
    table = wynn_epsilon(series.sample(), guard)
    table.name = "pade_epsilon"
    return table


def pade_label(k: int, n: int) -> tuple:
    """Map an even epsilon-table position to its Pade indices (l, m)."""
    if k % 2 != 0:
        raise InvalidParameterError(f"odd epsilon column {k} holds no approximant")
    return n + k // 2, k // 2


def staircase_sequence(series: PowerSeries, guard: Optional[GuardPolicy] = None) -> list:
    """The staircase [0/0], [1/0], [1/1], [2/1], [2/2], ... at z.

    Each successive entry consumes exactly one more partial sum.  Entries
    whose epsilon recursion tripped the guard are reported as
    ``(l, m, None)`` markers.
    """
    table = pade_via_epsilon(series, guard)
    out = []
    for k in table.approximant_orders():
        for n in (0, 1):
            if table.has_entry(k, n):
                l, m = pade_label(k, n)
                out.append((l, m, table.entry(k, n) if table.is_valid(k, n) else None))
    return out
