"""Sequence transformations with explicit remainder estimates.

The transforms here assume the remainder factorizes as
``s_n - s = omega_n * z_n`` with a user-supplied (or rule-derived)
estimate ``omega_n`` and a smooth correction ``z_n``.  Annihilating the
correction with a weighted k-th difference gives the ratio

    T_k^(n) = D^k { w_k(n) s_n / omega_n } / D^k { w_k(n) / omega_n }.

Power weights ``w_k(n) = (n+zeta)**(k-1)`` give Levin's transformation,
exact when ``z_n`` is a polynomial of degree < k in ``1/(n+zeta)``;
Pochhammer weights ``w_k(n) = (n+zeta)_{k-1}`` give the factorial-series
variant, the tool of choice for strongly divergent alternating series.

Remainder estimate rules follow Levin and Smith/Ford:

    u: omega_n = (zeta+n) * (s_n - s_{n-1})      t: omega_n = s_n - s_{n-1}
    v: omega_n = product/difference of adjacent  d: omega_n = s_{n+1} - s_n
       backward and forward differences

The backward difference at n=0 exists only when the series terms are
stored (then ``s_0 - s_{-1} = a_0``); otherwise the u/t/v tables simply
start at n=1.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence, Union

from .core import (
    GuardPolicy,
    Scalar,
    SequenceSample,
    TransformTable,
    append_column,
)
from .errors import InsufficientDataError, InvalidParameterError, ZeroRemainderError

LEVIN_POWER = "levin_power"
WENIGER_POCHHAMMER = "weniger_pochhammer"

#: u/t/v/d rule name, or an explicit estimate sequence aligned with the sample.
RemainderEstimateKind = Union[str, Sequence[Scalar]]

_ESTIMATE_RULES = ("u", "t", "v", "d")

_WENIGER_NAMES = {"u": "y", "t": "tau", "v": "phi", "d": "delta"}


def _weight_ratio(family: str, zeta: float, n: int, k: int, j: int) -> float:
    """The scaled weight ``w_k(n+j) / w_k(n+k)`` entering the binomial sums.

    Dividing by the j=k weight keeps the summands of moderate size for
    large orders.
    """
    if k <= 1:
        return 1.0
    if family == LEVIN_POWER:
        return ((zeta + n + j) / (zeta + n + k)) ** (k - 1)
    if family == WENIGER_POCHHAMMER:
        r = 1.0
        for i in range(k - 1):
            r *= (zeta + n + j + i) / (zeta + n + k + i)
        return r
    raise InvalidParameterError(f"unknown weight family {family!r}")


def _omega_with_start(
    sample: SequenceSample, kind: RemainderEstimateKind, zeta: float
) -> tuple:
    """Remainder estimates and the first sequence index they cover."""
    if not zeta > 0:
        raise InvalidParameterError("zeta must be positive")
    values = sample.effective_values()
    if not isinstance(kind, str):
        omegas = list(kind)
        if len(omegas) != len(values):
            raise InvalidParameterError(
                f"{len(omegas)} explicit estimates for {len(values)} elements"
            )
        _reject_zero(omegas, 0)
        return 0, omegas
    if kind not in _ESTIMATE_RULES:
        raise InvalidParameterError(f"unknown remainder estimate kind {kind!r}")

    terms = sample.effective_terms()
    diffs = [values[i + 1] - values[i] for i in range(len(values) - 1)]

    def backward(n: int) -> Scalar:
        # s_n - s_{n-1}; at n=0 this is the series term a_0 when available
        return diffs[n - 1] if n >= 1 else terms[0]

    if kind == "d":
        start = 0
    else:
        start = 0 if terms is not None else 1
    omegas = []
    last = len(values) - 2 if kind in ("v", "d") else len(values) - 1
    if last < start:
        raise InsufficientDataError(
            f"too few elements for the {kind} remainder estimate"
        )
    for n in range(start, last + 1):
        if kind == "u":
            w = (zeta + n) * backward(n)
        elif kind == "t":
            w = backward(n)
        elif kind == "d":
            w = diffs[n]
        else:  # v
            b, f = backward(n), diffs[n]
            den = b - f
            if den == 0:
                raise ZeroRemainderError(n, f"v estimate undefined at n={n}: equal differences")
            w = b * f / den
        omegas.append(w)
    _reject_zero(omegas, start)
    return start, omegas


def _reject_zero(omegas: Sequence[Scalar], start: int) -> None:
    for i, w in enumerate(omegas):
        if w == 0:
            raise ZeroRemainderError(start + i)


def omega_sequence(
    sample: SequenceSample, kind: RemainderEstimateKind, zeta: float = 1.0
) -> list:
    """The remainder estimates ``omega_n`` for the chosen rule.

    The list starts at n=1 for the u/t/v rules on a plain value sample
    (no backward difference exists at n=0) and at n=0 otherwise.
    """
    return _omega_with_start(sample, kind, zeta)[1]


def weighted_ratio_transform(
    sample: SequenceSample,
    omegas: Sequence[Scalar],
    family: str = LEVIN_POWER,
    zeta: float = 1.0,
    guard: Optional[GuardPolicy] = None,
) -> TransformTable:
    """The weighted-difference ratio transform for explicit estimates.

    ``omegas`` must align with the (offset-adjusted) sample values.  The
    entry ``T_k^(n)`` is exact for ``s_n = s + omega_n z_n`` whenever the
    chosen weight family annihilates ``z_n`` at order k.
    """
    guard = guard or GuardPolicy()
    values = sample.effective_values()
    omegas = list(omegas)
    if len(omegas) != len(values):
        raise InvalidParameterError(
            f"{len(omegas)} remainder estimates for {len(values)} elements"
        )
    _reject_zero(omegas, 0)
    name = "levin_ratio" if family == LEVIN_POWER else "weniger_ratio"
    return _ratio_table(name, values, omegas, family, zeta, guard, n_start=0, extra=0)


def _ratio_table(
    name: str,
    values: Sequence[Scalar],
    omegas: Sequence[Scalar],
    family: str,
    zeta: float,
    guard: GuardPolicy,
    n_start: int,
    extra: int,
) -> TransformTable:
    count = len(values)
    inv = [1.0 / w for w in omegas]
    ratio = [v * iw for v, iw in zip(values, inv)]
    columns = [list(values)]
    valid = [[True] * count]
    for k in range(1, count):

        def step(i, k=k):
            n = n_start + i
            num = 0.0
            den = 0.0
            sign = 1.0
            for j in range(k + 1):
                w = sign * math.comb(k, j) * _weight_ratio(family, zeta, n, k, j)
                num += w * ratio[i + j]
                den += w * inv[i + j]
                sign = -sign
            if guard.trips(den, num):
                return None
            return num / den

        append_column(columns, valid, count - k, step)
    return TransformTable(
        name, columns, valid, n_start=n_start, order_step=1,
        consumed_first=[k + 1 + extra for k in range(len(columns))],
    )


def _variant(
    sample: SequenceSample,
    kind: RemainderEstimateKind,
    zeta: float,
    guard: Optional[GuardPolicy],
    family: str,
) -> TransformTable:
    guard = guard or GuardPolicy()
    start, omegas = _omega_with_start(sample, kind, zeta)
    values = sample.effective_values()[start:start + len(omegas)]
    if isinstance(kind, str):
        rule = kind if family == LEVIN_POWER else _WENIGER_NAMES[kind]
        stem = "levin_" if family == LEVIN_POWER else "weniger_"
        name = stem + rule
        extra = start + (1 if kind in ("v", "d") else 0)
    else:
        name = ("levin_" if family == LEVIN_POWER else "weniger_") + "explicit"
        extra = 0
    return _ratio_table(name, values, omegas, family, zeta, guard, n_start=start, extra=extra)


def levin_variant(
    sample: SequenceSample,
    kind: RemainderEstimateKind,
    zeta: float = 1.0,
    guard: Optional[GuardPolicy] = None,
) -> TransformTable:
    """Levin's u/t/v/d transformations (power weights).

    u and v handle linear and much logarithmic convergence; t and d are
    at their best on alternating series but fail on logarithmic
    convergence.
    """
    return _variant(sample, kind, zeta, guard, LEVIN_POWER)


def weniger_variant(
    sample: SequenceSample,
    kind: RemainderEstimateKind,
    zeta: float = 1.0,
    guard: Optional[GuardPolicy] = None,
) -> TransformTable:
    """The factorial-series analogues y/tau/phi/delta (Pochhammer weights).

    ``kind`` still names the estimate rule (u/t/v/d).  The delta variant
    is particularly effective at summing strongly divergent alternating
    series.
    """
    return _variant(sample, kind, zeta, guard, WENIGER_POCHHAMMER)
