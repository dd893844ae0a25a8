"""Extrapolation methods built on interpolation: Richardson/Neville schemes,
Wynn's rho algorithm and its variants, and the decay-parameter estimator.

These transforms aim at logarithmically convergent sequences.  The
polynomial (Richardson) and rational (rho) standard forms handle remainders
``(n+beta)**(-alpha)`` with integer alpha; Osada's variant and the
Bjorstad-Dahlquist-Grosse iteration take a known nonintegral alpha and
restore the ``O(n**(-alpha-2k))`` error order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    GuardPolicy,
    Scalar,
    SequenceSample,
    TransformTable,
    append_column,
    cross_rule_table,
    is_finite,
)
from .errors import InsufficientDataError, InvalidParameterError

TO_ZERO = "to_zero"
TO_INFINITY = "to_infinity"


@dataclass(frozen=True)
class InterpolationPoints:
    """The grid ``x_n`` on which a sequence is read as samples of a function.

    Polynomial extrapolation sends strictly decreasing positive points to
    zero; rational extrapolation of the rho kind sends strictly increasing
    points to infinity.
    """

    x: tuple
    direction: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", tuple(self.x))
        if self.direction not in (TO_ZERO, TO_INFINITY):
            raise InvalidParameterError(f"unknown direction {self.direction!r}")
        if not self.x:
            raise InvalidParameterError("interpolation points must be nonempty")
        if any(not p > 0 for p in self.x):
            raise InvalidParameterError("interpolation points must be positive")
        pairs = zip(self.x, self.x[1:])
        if self.direction == TO_ZERO:
            if any(not a > b for a, b in pairs):
                raise InvalidParameterError("to_zero points must decrease strictly")
        elif any(not a < b for a, b in pairs):
            raise InvalidParameterError("to_infinity points must increase strictly")

    def __len__(self) -> int:
        return len(self.x)


def reciprocal_points(length: int, beta: float = 1.0) -> InterpolationPoints:
    """The customary Richardson grid ``x_n = 1 / (n + beta)``."""
    if beta <= 0:
        raise InvalidParameterError("beta must be positive")
    return InterpolationPoints(tuple(1.0 / (n + beta) for n in range(length)), TO_ZERO)


def natural_points(length: int) -> InterpolationPoints:
    """The customary rho grid ``x_n = n + 1``."""
    return InterpolationPoints(tuple(float(n + 1) for n in range(length)), TO_INFINITY)


def _require_points(points: InterpolationPoints, direction: str, length: int) -> tuple:
    if points.direction != direction:
        raise InvalidParameterError(f"interpolation points must run {direction}")
    if len(points) < length:
        raise InvalidParameterError(
            f"{len(points)} interpolation points for {length} sequence elements"
        )
    return points.x


def neville_richardson(
    sample: SequenceSample,
    points: InterpolationPoints,
    guard: Optional[GuardPolicy] = None,
) -> TransformTable:
    """Neville's scheme for the value at x=0 of the interpolating polynomial.

    Richardson extrapolation in its general form: column k holds the
    degree-k polynomial through ``(x_n, s_n) .. (x_{n+k}, s_{n+k})``
    evaluated at zero, hence it is exact once the sequence is polynomial
    of degree <= k in x.
    """
    guard = guard or GuardPolicy()
    s = sample.effective_values()
    x = _require_points(points, TO_ZERO, len(s))
    columns = [list(s)]
    valid = [[True] * len(s)]
    for k in range(1, len(s)):
        cur, cur_ok = columns[k - 1], valid[k - 1]

        def step(n, cur=cur, cur_ok=cur_ok, k=k):
            if not (cur_ok[n] and cur_ok[n + 1]):
                return None
            num = x[n] * cur[n + 1] - x[n + k] * cur[n]
            den = x[n] - x[n + k]
            if guard.trips(den, num):
                return None
            return num / den

        append_column(columns, valid, len(cur) - 1, step)
    return TransformTable("richardson_general", columns, valid)


def richardson_standard(
    sample: SequenceSample,
    beta: float = 1.0,
    guard: Optional[GuardPolicy] = None,
) -> TransformTable:
    """Richardson extrapolation on the standard grid ``x_n = 1/(n + beta)``.

    Accelerates remainders ``(n+beta)**(-alpha)`` when alpha is a positive
    integer; fails for nonintegral alpha.
    """
    guard = guard or GuardPolicy()
    if beta <= 0:
        raise InvalidParameterError("beta must be positive")
    s = sample.effective_values()
    columns = [list(s)]
    valid = [[True] * len(s)]
    for k in range(1, len(s)):
        cur, cur_ok = columns[k - 1], valid[k - 1]

        def step(n, cur=cur, cur_ok=cur_ok, k=k):
            if not (cur_ok[n] and cur_ok[n + 1]):
                return None
            return cur[n + 1] + (beta + n) / k * (cur[n + 1] - cur[n])

        append_column(columns, valid, len(cur) - 1, step)
    return TransformTable("richardson", columns, valid)


def richardson_binomial(
    values: Sequence[Scalar], beta: float, k: int, n: int
) -> Scalar:
    """Closed binomial form of standard Richardson extrapolation.

    Equivalent to the recursive scheme; kept as an explicit cross-check
    and for single-entry evaluation.
    """
    if beta <= 0:
        raise InvalidParameterError("beta must be positive")
    if k < 0 or n < 0 or n + k >= len(values):
        raise InvalidParameterError("entry (k, n) not computable from the given values")
    acc = 0.0
    for j in range(k + 1):
        weight = (-1.0) ** j * (beta + n + j) ** k / (
            math.factorial(j) * math.factorial(k - j)
        )
        acc = acc + weight * values[n + j]
    return (-1.0) ** k * acc


def wynn_rho(
    sample: SequenceSample,
    points: InterpolationPoints,
    guard: Optional[GuardPolicy] = None,
) -> TransformTable:
    """Wynn's rho algorithm on explicit interpolation points.

    The rational-extrapolation counterpart of the epsilon algorithm: even
    columns hold the value at infinity of the rational interpolant through
    the points consumed.  Strong on logarithmic convergence, useless for
    linear convergence and divergent series.
    """
    guard = guard or GuardPolicy()
    s = sample.effective_values()
    x = _require_points(points, TO_INFINITY, len(s))
    return cross_rule_table("rho_general", s, lambda k, n: x[n + k] - x[n], guard)


def rho_standard(sample: SequenceSample, guard: Optional[GuardPolicy] = None) -> TransformTable:
    """Wynn's rho algorithm on the standard points ``x_n = n + 1``."""
    guard = guard or GuardPolicy()
    s = sample.effective_values()
    return cross_rule_table("rho", s, lambda k, n: float(k), guard)


def osada_rho(
    sample: SequenceSample,
    alpha: float,
    guard: Optional[GuardPolicy] = None,
) -> TransformTable:
    """Osada's variant of the rho algorithm for a known decay exponent.

    Replaces the numerator k+1 of the standard rho recursion by k+alpha;
    for remainders ``(n+beta)**(-alpha)`` the even-column error falls like
    ``n**(-alpha-2k)`` for any alpha > 0 (Osada 1990).
    """
    guard = guard or GuardPolicy()
    if not alpha > 0:
        raise InvalidParameterError("alpha must be positive")
    s = sample.effective_values()
    return cross_rule_table("rho_osada", s, lambda k, n: k - 1 + alpha, guard)


def iterated_rho(
    sample: SequenceSample,
    points: InterpolationPoints,
    guard: Optional[GuardPolicy] = None,
) -> TransformTable:
    """Iteration of the closed-form rho_2 expression on explicit points.

    Column k consumes 2k+1 elements and inherits the rho algorithm's
    affinity for logarithmic convergence.
    """
    guard = guard or GuardPolicy()
    s = sample.effective_values()
    x = _require_points(points, TO_INFINITY, len(s))
    if len(s) < 3:
        raise InsufficientDataError("iterated rho needs at least 3 elements")
    columns = [list(s)]
    valid = [[True] * len(s)]
    k = 0
    while len(columns[-1]) >= 3:
        cur, cur_ok = columns[-1], valid[-1]

        def step(n, cur=cur, cur_ok=cur_ok, k=k):
            if not (cur_ok[n] and cur_ok[n + 1] and cur_ok[n + 2]):
                return None
            d0 = cur[n + 1] - cur[n]
            d1 = cur[n + 2] - cur[n + 1]
            num = (x[n + 2 * k + 2] - x[n]) * d1 * d0
            den = (x[n + 2 * k + 2] - x[n + 1]) * d0 - (x[n + 2 * k + 1] - x[n]) * d1
            if guard.trips(den, num):
                return None
            return cur[n + 1] + num / den

        append_column(columns, valid, len(cur) - 2, step)
        k += 1
    return TransformTable(
        "rho_iterated_general", columns, valid,
        consumed_first=[2 * j + 1 for j in range(len(columns))],
    )


def iterated_rho_standard(
    sample: SequenceSample, guard: Optional[GuardPolicy] = None
) -> TransformTable:
    """Iterated rho_2 on the standard points ``x_n = n + 1``."""
    guard = guard or GuardPolicy()
    s = sample.effective_values()
    if len(s) < 3:
        raise InsufficientDataError("iterated rho needs at least 3 elements")
    columns = [list(s)]
    valid = [[True] * len(s)]
    k = 0
    while len(columns[-1]) >= 3:
        cur, cur_ok = columns[-1], valid[-1]

        def step(n, cur=cur, cur_ok=cur_ok, k=k):
            if not (cur_ok[n] and cur_ok[n + 1] and cur_ok[n + 2]):
                return None
            d0 = cur[n + 1] - cur[n]
            d1 = cur[n + 2] - cur[n + 1]
            num = (2 * k + 2) * d1 * d0
            den = (2 * k + 1) * (d1 - d0)
            if guard.trips(den, num):
                return None
            return cur[n + 1] - num / den

        append_column(columns, valid, len(cur) - 2, step)
        k += 1
    return TransformTable(
        "rho_iterated", columns, valid,
        consumed_first=[2 * j + 1 for j in range(len(columns))],
    )


def bdg_transform(
    sample: SequenceSample,
    alpha: float,
    guard: Optional[GuardPolicy] = None,
) -> TransformTable:
    """The Bjorstad-Dahlquist-Grosse iteration for a known decay exponent.

    Iterates the closed-form Osada rho_2 step with alpha increased by two
    per level; the column-k error falls like ``n**(-alpha-2k)``.
    """
    guard = guard or GuardPolicy()
    if not alpha > 0:
        raise InvalidParameterError("alpha must be positive")
    s = sample.effective_values()
    if len(s) < 3:
        raise InsufficientDataError("the BDG transformation needs at least 3 elements")
    columns = [list(s)]
    valid = [[True] * len(s)]
    k = 0
    while len(columns[-1]) >= 3:
        cur, cur_ok = columns[-1], valid[-1]
        factor = (2 * k + alpha + 1) / (2 * k + alpha)

        def step(n, cur=cur, cur_ok=cur_ok, factor=factor):
            if not (cur_ok[n] and cur_ok[n + 1] and cur_ok[n + 2]):
                return None
            d0 = cur[n + 1] - cur[n]
            d1 = cur[n + 2] - cur[n + 1]
            num = factor * d1 * d0
            den = d1 - d0
            if guard.trips(den, num):
                return None
            return cur[n + 1] - num / den

        append_column(columns, valid, len(cur) - 2, step)
        k += 1
    return TransformTable(
        "bdg", columns, valid,
        consumed_first=[2 * j + 1 for j in range(len(columns))],
    )


def estimate_decay(
    sample: SequenceSample, guard: Optional[GuardPolicy] = None
) -> list:
    """Estimate the decay exponent alpha from a weighted third difference.

    For remainders ``(n+beta)**(-alpha) * (c0 + c1/(n+beta) + ...)`` the
    returned ``T_n`` satisfy ``alpha = T_n + O(1/n**2)``.  A third-
    difference ratio is potentially very unstable, so the full list is
    returned (``None`` marks guard trips) and any aggregation is left to
    the caller; the CLI summarizes with the median of the last quartile.
    """
    guard = guard or GuardPolicy()
    s = sample.effective_values()
    if len(s) < 4:
        raise InsufficientDataError("decay estimation needs at least 4 elements")
    out = []
    for n in range(len(s) - 3):
        d0 = s[n + 1] - s[n]
        d1 = s[n + 2] - s[n + 1]
        d2 = s[n + 3] - s[n + 2]
        dd0 = d1 - d0
        dd1 = d2 - d1
        num = dd0 * dd1
        den = d1 * dd1 - d2 * dd0
        if guard.trips(den, num):
            out.append(None)
            continue
        try:
            t = num / den - 1.0
        except ZeroDivisionError:
            t = None
        out.append(t if t is not None and is_finite(t) else None)
    return out


def median_last_quartile(estimates: Sequence[Optional[Scalar]]) -> Scalar:
    """Median of the valid entries in the last quarter of the list."""
    tail = [t for t in estimates[3 * len(estimates) // 4:] if t is not None]
    if not tail:
        raise InsufficientDataError("no valid decay estimates in the last quartile")
    tail.sort(key=lambda t: (t.real, t.imag) if isinstance(t, complex) else t)
    mid = len(tail) // 2
    if len(tail) % 2 == 1:
        return tail[mid]
    return (tail[mid - 1] + tail[mid]) / 2
