"""Aitken's delta-squared process, Wynn's epsilon algorithm, and Brezinski's
theta algorithm, together with their iterations.

These are the classic accelerators for linearly convergent sequences.  The
epsilon algorithm is exact for remainders built from k exponential terms
and sums many alternating divergent series; the theta algorithm and its
iteration additionally handle a good deal of logarithmic convergence.
"""

from __future__ import annotations

from typing import Optional

from .core import (
    GuardPolicy,
    Scalar,
    SequenceSample,
    TransformTable,
    append_column,
    cross_rule_table,
)
from .errors import InsufficientDataError, SingularStepError


def aitken_step(s0: Scalar, s1: Scalar, s2: Scalar, guard: Optional[GuardPolicy] = None) -> Scalar:
    """One Aitken step ``s0 - (s1 - s0)^2 / (s2 - 2 s1 + s0)``.

    Exact for ``s_n = s + c * lambda**n``; raises ``SingularStepError``
    when the second difference vanishes (arithmetic progressions).
    """
    guard = guard or GuardPolicy()
    d = s1 - s0
    dd = s2 - 2 * s1 + s0
    num = d * d
    if guard.trips(dd, num):
        raise SingularStepError("second difference vanished in Aitken step")
    try:
        return s0 - num / dd
    except ZeroDivisionError:
        raise SingularStepError("second difference vanished in Aitken step") from None


def iterated_aitken(sample: SequenceSample, guard: Optional[GuardPolicy] = None) -> TransformTable:
    """Aitken's delta-squared process applied to its own output, repeatedly.

    Column k+1 applies the plain step to column k, so column k consumes
    2k+1 elements.  Singular steps flag entries invalid; they are never
    fatal here.
    """
    guard = guard or GuardPolicy()
    s = sample.effective_values()
    if len(s) < 3:
        raise InsufficientDataError("iterated Aitken needs at least 3 elements")
    columns = [list(s)]
    valid = [[True] * len(s)]
    while len(columns[-1]) >= 3:
        cur, cur_ok = columns[-1], valid[-1]

        def step(n, cur=cur, cur_ok=cur_ok):
            if not (cur_ok[n] and cur_ok[n + 1] and cur_ok[n + 2]):
                return None
            d = cur[n + 1] - cur[n]
            dd = cur[n + 2] - 2 * cur[n + 1] + cur[n]
            num = d * d
            if guard.trips(dd, num):
                return None
            return cur[n] - num / dd

        append_column(columns, valid, len(cur) - 2, step)
    return TransformTable(
        "aitken", columns, valid,
        consumed_first=[2 * k + 1 for k in range(len(columns))],
    )


def wynn_epsilon(sample: SequenceSample, guard: Optional[GuardPolicy] = None) -> TransformTable:
    """Wynn's epsilon algorithm.

    The even columns hold the approximants; eps_{2k} is exact when the
    remainder is a sum of k exponential terms, and on the partial sums of
    a power series it produces the [n+k/k] Pade approximants.  Odd
    columns are auxiliary quantities only.
    """
    guard = guard or GuardPolicy()
    s = sample.effective_values()
    return cross_rule_table("epsilon", s, lambda k, n: 1.0, guard)


def brezinski_theta(sample: SequenceSample, guard: Optional[GuardPolicy] = None) -> TransformTable:
    """Brezinski's theta algorithm.

    A modification of the epsilon recursion that also accelerates many
    logarithmically convergent sequences.  Even columns are approximants;
    theta_{2k} consumes 3k+1 elements.
    """
    guard = guard or GuardPolicy()
    s = sample.effective_values()
    columns = [list(s)]
    valid = [[True] * len(s)]
    consumed = [1]
    while True:
        k = len(columns)
        if k % 2 == 1:
            # odd rule: theta_{2j+1}^(n) = theta_{2j-1}^(n+1) + 1 / (theta_{2j}^(n+1) - theta_{2j}^(n))
            cur, cur_ok = columns[k - 1], valid[k - 1]
            base, base_ok = (columns[k - 2], valid[k - 2]) if k >= 2 else (None, None)
            length = len(cur) - 1

            def step(n, cur=cur, cur_ok=cur_ok, base=base, base_ok=base_ok):
                if not (cur_ok[n] and cur_ok[n + 1]):
                    return None
                if base is not None and not base_ok[n + 1]:
                    return None
                diff = cur[n + 1] - cur[n]
                if guard.trips(diff, 1.0):
                    return None
                left = base[n + 1] if base is not None else 0.0
                return left + 1.0 / diff

        else:
            # even rule: theta_{2j+2}^(n) = theta_{2j}^(n+1)
            #   + (D theta_{2j}^(n+1)) (D theta_{2j+1}^(n+1)) / (D^2 theta_{2j+1}^(n))
            even, even_ok = columns[k - 2], valid[k - 2]
            odd, odd_ok = columns[k - 1], valid[k - 1]
            length = min(len(even), len(odd)) - 2

            def step(n, even=even, even_ok=even_ok, odd=odd, odd_ok=odd_ok):
                if not (even_ok[n + 1] and even_ok[n + 2]):
                    return None
                if not (odd_ok[n] and odd_ok[n + 1] and odd_ok[n + 2]):
                    return None
                num = (even[n + 2] - even[n + 1]) * (odd[n + 2] - odd[n + 1])
                den = odd[n + 2] - 2 * odd[n + 1] + odd[n]
                if guard.trips(den, num):
                    return None
                return even[n + 1] + num / den

        if length <= 0:
            break
        append_column(columns, valid, length, step)
        consumed.append(consumed[-1] + (1 if k % 2 == 1 else 2))
    return TransformTable(
        "theta", columns, valid, order_step=2, consumed_first=consumed,
    )


def iterated_theta(sample: SequenceSample, guard: Optional[GuardPolicy] = None) -> TransformTable:
    """Iteration of the closed-form theta_2 expression.

    Column k+1 applies the four-element theta_2 step to column k, so
    column k consumes 3k+1 elements.  Shares the theta algorithm's reach:
    linear and logarithmic convergence, many divergent series.
    """
    guard = guard or GuardPolicy()
    s = sample.effective_values()
    if len(s) < 4:
        raise InsufficientDataError("iterated theta needs at least 4 elements")
    columns = [list(s)]
    valid = [[True] * len(s)]
    while len(columns[-1]) >= 4:
        cur, cur_ok = columns[-1], valid[-1]

        def step(n, cur=cur, cur_ok=cur_ok):
            if not all(cur_ok[n + i] for i in range(4)):
                return None
            d0 = cur[n + 1] - cur[n]
            d1 = cur[n + 2] - cur[n + 1]
            d2 = cur[n + 3] - cur[n + 2]
            num = d0 * d1 * (d2 - d1)
            den = d2 * (d1 - d0) - d0 * (d2 - d1)
            if guard.trips(den, num):
                return None
            return cur[n + 1] - num / den

        append_column(columns, valid, len(cur) - 3, step)
    return TransformTable(
        "theta_iterated", columns, valid,
        consumed_first=[3 * k + 1 for k in range(len(columns))],
    )
