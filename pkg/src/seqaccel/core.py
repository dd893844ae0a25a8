"""Sequence containers, triangular transform tables, paths, and numerical guards.

Every transformation in this package maps a finite sequence prefix
``s_0 .. s_N`` to a doubly indexed triangular array ``T_k^(n)``.  The
subscript ``k`` is the transformation order, the superscript ``n`` is the
smallest sequence index entering the entry, and column 0 always repeats
the input (``T_0^(n) = s_n``).  Entries whose defining recursion ran into
a near-zero denominator are flagged invalid instead of carrying an
unreliable number, and invalidity propagates to every dependent entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence, Union

from .errors import (
    ConsistencyError,
    EmptyInputError,
    InsufficientDataError,
    InvalidParameterError,
    PathRangeError,
)

#: Any numeric type closed under +, -, *, / with a magnitude via abs().
#: The package is written against plain double precision but performs no
#: coercion, so exact or extended-precision scalars pass through untouched.
Scalar = Union[float, complex]

_CONSISTENCY_RTOL = 1e-9


def is_finite(value: Scalar) -> bool:
    """True unless value is a float/complex NaN or infinity."""
    if isinstance(value, complex):
        return math.isfinite(value.real) and math.isfinite(value.imag)
    if isinstance(value, (float, int)):
        return math.isfinite(value)
    return True


@dataclass(frozen=True)
class GuardPolicy:
    """Near-zero denominator detection for transform recursions.

    A denominator ``d`` trips the guard when
    ``|d| < relative_threshold * max(1, |numerator|)``.  A tripped guard
    flags the affected table entry invalid; no division is attempted.
    """

    relative_threshold: float = 1e-14

    def __post_init__(self) -> None:
        if self.relative_threshold < 0:
            raise InvalidParameterError("guard threshold must be nonnegative")

    def trips(self, denominator: Scalar, numerator_scale: Scalar = 1.0) -> bool:
        return abs(denominator) < self.relative_threshold * max(1.0, abs(numerator_scale))


def _check_partial_sums(values: Sequence[Scalar], terms: Sequence[Scalar]) -> None:
    deltas = [(values[0], terms[0])]
    deltas += [(values[n] - values[n - 1], terms[n]) for n in range(1, len(values))]
    for n, (got, want) in enumerate(deltas):
        scale = max(1.0, abs(values[n]), abs(want))
        if abs(got - want) > _CONSISTENCY_RTOL * scale:
            raise ConsistencyError(
                f"values are not the partial sums of terms at n={n}: "
                f"difference {got!r} vs term {want!r}"
            )


@dataclass(frozen=True)
class SequenceSample:
    """A finite prefix ``s_0 .. s_N`` of a real or complex sequence.

    ``terms``, when present, are series terms ``a_k`` with
    ``s_n = a_0 + ... + a_n`` (checked on construction).  ``limit`` is a
    known limit or antilimit used for error reporting only.
    ``start_offset`` excludes that many leading elements from every
    transformation, the usual remedy when the first few elements of a
    sequence behave irregularly.
    """

    values: tuple
    terms: Optional[tuple] = None
    limit: Optional[Scalar] = None
    start_offset: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise EmptyInputError("a sequence sample needs at least one element")
        if not isinstance(self.start_offset, int) or not 0 <= self.start_offset < len(self.values):
            raise InvalidParameterError(
                f"start_offset {self.start_offset!r} must be an integer in [0, {len(self.values)})"
            )
        if self.terms is not None:
            object.__setattr__(self, "terms", tuple(self.terms))
            if len(self.terms) != len(self.values):
                raise ConsistencyError(
                    f"{len(self.terms)} terms cannot produce {len(self.values)} partial sums"
                )
            _check_partial_sums(self.values, self.terms)

    def __len__(self) -> int:
        return len(self.values)

    def effective_values(self) -> tuple:
        """Values with the start offset applied."""
        return self.values[self.start_offset:]

    def effective_terms(self) -> Optional[tuple]:
        """Terms when they still align with the effective values.

        Once leading elements are excluded the retained values are no
        longer the partial sums of any stored term prefix, so offset
        samples report no terms.
        """
        return self.terms if self.start_offset == 0 else None

    def with_offset(self, start_offset: int) -> "SequenceSample":
        return SequenceSample(self.values, self.terms, self.limit, start_offset)


def make_partial_sums(terms: Sequence[Scalar]) -> SequenceSample:
    """Build the partial-sum sample ``s_n = a_0 + ... + a_n`` of a series."""
    terms = tuple(terms)
    if not terms:
        raise EmptyInputError("cannot form partial sums of an empty series")
    values = []
    acc = terms[0]
    values.append(acc)
    for a in terms[1:]:
        acc = acc + a
        values.append(acc)
    return SequenceSample(tuple(values), terms=terms)


@dataclass
class TransformTable:
    """Triangular array ``T_k^(n)`` stored column-wise with validity flags.

    ``columns[k][n - n_start]`` holds ``T_k^(n)`` (``None`` when invalid).
    ``order_step`` is 2 for algorithms whose odd-order entries are mere
    auxiliary quantities (epsilon, theta, rho families); approximants then
    live in the even columns only.  ``consumed_first[k]`` records how many
    input elements the first entry of column ``k`` consumes, from which the
    data budget of any entry follows.
    """

    name: str
    columns: list
    valid: list
    n_start: int = 0
    order_step: int = 1
    consumed_first: Optional[list] = None

    @property
    def max_order(self) -> int:
        return len(self.columns) - 1

    @property
    def max_index(self) -> int:
        return self.n_start + len(self.columns[0]) - 1

    def has_entry(self, k: int, n: int) -> bool:
        if not 0 <= k <= self.max_order:
            return False
        return 0 <= n - self.n_start < len(self.columns[k])

    def entry(self, k: int, n: int) -> Optional[Scalar]:
        if not self.has_entry(k, n):
            raise PathRangeError(f"table {self.name} has no entry ({k}, {n})")
        return self.columns[k][n - self.n_start]

    def is_valid(self, k: int, n: int) -> bool:
        return self.has_entry(k, n) and self.valid[k][n - self.n_start]

    def approximant_orders(self) -> list:
        return list(range(0, self.max_order + 1, self.order_step))

    def column(self, k: int) -> list:
        """Entries of column ``k`` as ``(n, value, valid)`` triples."""
        return [
            (self.n_start + i, self.columns[k][i], self.valid[k][i])
            for i in range(len(self.columns[k]))
        ]

    def entries(self) -> Iterator[tuple]:
        for k in range(len(self.columns)):
            for n, value, ok in self.column(k):
                yield k, n, value, ok

    def consumed(self, k: int, n: int) -> int:
        """Number of input elements consumed to compute ``T_k^(n)``."""
        first = self.consumed_first[k] if self.consumed_first else k + 1
        return first + (n - self.n_start)


def append_column(columns: list, valid: list, length: int, step: Callable[[int], Optional[Scalar]]) -> None:
    """Append one table column, flagging guard trips and non-finite values.

    ``step(i)`` returns the entry at row ``i`` or ``None`` for a guard trip
    or an invalid antecedent.
    """
    col, ok = [], []
    for i in range(max(0, length)):
        try:
            v = step(i)
        except (ZeroDivisionError, OverflowError):
            v = None
        good = v is not None and is_finite(v)
        col.append(v if good else None)
        ok.append(good)
    columns.append(col)
    valid.append(ok)


def cross_rule_table(
    name: str,
    values: Sequence[Scalar],
    numerator: Callable[[int, int], Scalar],
    guard: GuardPolicy,
    consumed_first: Optional[list] = None,
) -> TransformTable:
    """Tables of the lozenge form ``T_{k}^(n) = T_{k-2}^(n+1) + num / diff``.

    The epsilon, rho, and Osada algorithms all share this recursion shape;
    they differ only in the numerator ``numerator(k, n)`` placed over
    ``T_{k-1}^(n+1) - T_{k-1}^(n)``.  Column -1 is an implicit row of
    zeros, and only even-order columns are approximants.
    """
    columns = [list(values)]
    valid = [[True] * len(values)]
    for k in range(1, len(values)):
        cur, cur_ok = columns[k - 1], valid[k - 1]
        base, base_ok = (columns[k - 2], valid[k - 2]) if k >= 2 else (None, None)

        def step(n, cur=cur, cur_ok=cur_ok, base=base, base_ok=base_ok, k=k):
            if not (cur_ok[n] and cur_ok[n + 1]):
                return None
            if base is not None and not base_ok[n + 1]:
                return None
            num = numerator(k, n)
            diff = cur[n + 1] - cur[n]
            if guard.trips(diff, num):
                return None
            left = base[n + 1] if base is not None else 0.0
            return left + num / diff

        append_column(columns, valid, len(cur) - 1, step)
    return TransformTable(name, columns, valid, order_step=2, consumed_first=consumed_first)


@dataclass(frozen=True)
class PathSpec:
    """A traversal of a transform table.

    ``order_constant`` walks one column with increasing ``n``;
    ``index_constant`` fixes ``n`` and climbs the approximant orders;
    ``staircase`` visits ``(k, n_start)`` and ``(k, n_start + 1)`` for each
    approximant order in turn, so that every new sequence element is used
    at the highest order the data admit.
    """

    kind: str
    order: Optional[int] = None
    index: Optional[int] = None

    _KINDS = ("order_constant", "index_constant", "staircase")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise InvalidParameterError(f"unknown path kind {self.kind!r}")
        if self.kind == "order_constant" and self.order is None:
            raise InvalidParameterError("order_constant path needs an order k")

    @classmethod
    def order_constant(cls, k: int) -> "PathSpec":
        return cls("order_constant", order=k)

    @classmethod
    def index_constant(cls, n0: Optional[int] = None) -> "PathSpec":
        return cls("index_constant", index=n0)

    @classmethod
    def staircase(cls) -> "PathSpec":
        return cls("staircase")

    def describe(self) -> str:
        if self.kind == "order_constant":
            return f"order_constant(k={self.order})"
        if self.kind == "index_constant":
            return f"index_constant(n0={'auto' if self.index is None else self.index})"
        return "staircase"


def walk_path(table: TransformTable, path: PathSpec) -> list:
    """All table positions along ``path`` as ``(k, n, value, valid)`` tuples.

    Invalid positions are kept (value ``None``) so that reports can mark
    them; ``extract_path`` is the valid-only view.
    """
    out = []
    if path.kind == "order_constant":
        k = path.order
        if not 0 <= k <= table.max_order:
            raise PathRangeError(
                f"order {k} outside table orders [0, {table.max_order}]"
            )
        for n, value, ok in table.column(k):
            out.append((k, n, value, ok))
    elif path.kind == "index_constant":
        n0 = table.n_start if path.index is None else path.index
        if not table.n_start <= n0 <= table.max_index:
            raise PathRangeError(
                f"index {n0} outside table indices [{table.n_start}, {table.max_index}]"
            )
        for k in table.approximant_orders():
            if table.has_entry(k, n0):
                out.append((k, n0, table.entry(k, n0), table.is_valid(k, n0)))
    else:
        for k in table.approximant_orders():
            for n in (table.n_start, table.n_start + 1):
                if table.has_entry(k, n):
                    out.append((k, n, table.entry(k, n), table.is_valid(k, n)))
    return out


def extract_path(table: TransformTable, path: PathSpec) -> list:
    """Valid table entries along ``path``, as ``(k, n, value)`` triples."""
    return [(k, n, v) for k, n, v, ok in walk_path(table, path) if ok]


@dataclass(frozen=True)
class ConvergenceClassification:
    kind: str  # "linear" | "logarithmic" | "undetermined"
    rho: Optional[Scalar] = None


def classify_convergence(
    sample: SequenceSample,
    tol: float = 0.05,
    guard: Optional[GuardPolicy] = None,
) -> ConvergenceClassification:
    """Classify convergence from the trailing remainder ratios.

    The ratios ``(s_{n+1} - s) / (s_n - s)`` are computed against the known
    limit, or against the last element as a proxy when no limit is
    attached.  If the last three usable ratios agree to within ``tol`` the
    sequence is classified linear (``|rho| < 1 - tol``) or logarithmic
    (``|rho - 1| <= tol``); everything else is undetermined.
    """
    guard = guard or GuardPolicy()
    vals = sample.effective_values()
    limit = sample.limit
    if limit is None:
        if len(vals) < 6:
            raise InsufficientDataError(
                "classification without a known limit needs at least 6 elements"
            )
        limit = vals[-1]
        vals = vals[:-1]
    ratios = []
    for n in range(len(vals) - 1):
        num = vals[n + 1] - limit
        den = vals[n] - limit
        if guard.trips(den, num) or den == 0:
            continue
        ratios.append(num / den)
    if len(ratios) < 4:
        raise InsufficientDataError(
            f"only {len(ratios)} usable remainder ratios, need at least 4"
        )
    tail = ratios[-3:]
    spread = max(abs(a - b) for a in tail for b in tail)
    if spread > tol:
        return ConvergenceClassification("undetermined")
    rho = sum(tail) / 3
    if abs(rho) < 1.0 - tol:
        return ConvergenceClassification("linear", rho)
    if abs(rho - 1.0) <= tol:
        return ConvergenceClassification("logarithmic", rho)
    return ConvergenceClassification("undetermined")
