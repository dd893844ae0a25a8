"""Independent oracles and canonical problem generators.

Nothing here goes through a sequence transformation, so these values can
sit on the other side of an equality test: the Euler-Maclaurin tail gives
zeta(z) to near machine accuracy for Re z > 1, the Stieltjes integral
gives the sum the divergent factorial series should be assigned, and the
brute-force model solver recovers the limit of any explicit model
sequence by plain linear algebra.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from scipy.integrate import quad

from .core import Scalar, SequenceSample, make_partial_sums
from .errors import (
    DegenerateModelError,
    DomainError,
    InvalidParameterError,
    SingularMatrixError,
)
from .linalg import solve_dense

DEFAULT_BERNOULLI_ORDER = 20  # highest 2j index: B_2 .. B_40


class BernoulliTables:
    """Bernoulli numbers (exact rationals) and polynomial evaluation.

    Built once from the defining recurrence
    ``B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j`` with the B_1 = -1/2
    convention, then shared read-only.
    """

    def __init__(self, j_max: int = DEFAULT_BERNOULLI_ORDER):
        if j_max < 1:
            raise InvalidParameterError("j_max must be at least 1")
        self.j_max = j_max
        numbers = [Fraction(1)]
        for m in range(1, 2 * j_max + 1):
            acc = Fraction(0)
            for j in range(m):
                acc += math.comb(m + 1, j) * numbers[j]
            numbers.append(-acc / (m + 1))
        self._numbers = tuple(numbers)

    def number(self, m: int) -> Fraction:
        """The Bernoulli number B_m."""
        if not 0 <= m <= 2 * self.j_max:
            raise InvalidParameterError(f"B_{m} outside the built range")
        return self._numbers[m]

    def even_float(self, j: int) -> float:
        """B_{2j} as a float."""
        return float(self.number(2 * j))

    def polynomial(self, m: int, x: Scalar) -> Scalar:
        """The Bernoulli polynomial B_m(x); B_m(0) equals B_m."""
        acc = 0.0
        for k in range(m + 1):
            acc = acc + math.comb(m, k) * float(self.number(k)) * x ** (m - k)
        return acc


@lru_cache(maxsize=4)
def bernoulli_tables(j_max: int = DEFAULT_BERNOULLI_ORDER) -> BernoulliTables:
    return BernoulliTables(j_max)


def pochhammer(z: Scalar, m: int) -> Scalar:
    """The rising factorial (z)_m = z (z+1) ... (z+m-1); (z)_0 = 1."""
    if not isinstance(m, int) or m < 0:
        raise InvalidParameterError("pochhammer needs an integer m >= 0")
    acc = 1.0
    for i in range(m):
        acc = acc * (z + i)
    return acc


def _real_part(z: Scalar) -> float:
    return z.real if isinstance(z, complex) else float(z)


def euler_maclaurin_zeta(z: Scalar, n: int = 40, k: int = 12) -> Scalar:
    """zeta(z) for Re z > 1 from the Euler-Maclaurin tail of the Dirichlet series.

    Adds the partial sum through (n+1)^(-z) and the first k correction
    terms of the tail expansion at n+2.  The omitted remainder shrinks
    rapidly with n, so stability under (n, k) refinement bounds the
    truncation empirically.
    """
    if _real_part(z) <= 1:
        raise DomainError("the Dirichlet series for zeta converges only for Re z > 1")
    if n < 0:
        raise InvalidParameterError("n must be nonnegative")
    tables = bernoulli_tables()
    if not 1 <= k <= tables.j_max:
        raise InvalidParameterError(f"k must lie in [1, {tables.j_max}]")
    partial = 0.0
    for nu in range(n + 1):
        partial = partial + (nu + 1) ** (-z)
    base = n + 2
    tail = base ** (1 - z) / (z - 1) + 0.5 * base ** (-z)
    for j in range(1, k + 1):
        coeff = tables.even_float(j) / math.factorial(2 * j)
        tail = tail + pochhammer(z, 2 * j - 1) * coeff * base ** (-z - 2 * j + 1)
    return partial + tail


def euler_series_value(x: float, tol: float = 1e-13) -> float:
    """The Stieltjes-integral sum assigned to ``sum_k k! (-x)^k``.

    Evaluates ``integral_0^inf exp(-t) / (1 + x t) dt`` by adaptive
    quadrature; the series itself diverges for every x > 0.
    """
    if not x > 0:
        raise DomainError("the Stieltjes integral needs x > 0")
    value, _ = quad(
        lambda t: math.exp(-t) / (1.0 + x * t), 0.0, math.inf,
        epsabs=tol, epsrel=tol, limit=400,
    )
    return value


def e_oracle(samples: Sequence[Scalar], phis: Sequence[Sequence[Scalar]]) -> Scalar:
    """Brute-force model-sequence solver.

    Given k+1 consecutive elements of ``s_n = s + sum_j c_j phi_j(n)`` and
    the matrix ``phis[i][j] = phi_j(n+i)``, solve the linear system for
    the k+1 unknowns and return the limit s.  This is the generic
    transformation every specialized scheme reproduces on its own model.
    """
    k = len(samples) - 1
    if len(phis) != k + 1 or any(len(row) != k for row in phis):
        raise InvalidParameterError(
            f"phis must be a {k + 1} x {k} matrix to match {k + 1} samples"
        )
    matrix = [[1.0, *phis[i]] for i in range(k + 1)]
    try:
        solution = solve_dense(matrix, list(samples))
    except SingularMatrixError as exc:
        raise DegenerateModelError(f"model system is singular: {exc}") from exc
    return solution[0]


_POWER_SERIES = {
    "exp": {
        "coefficient": lambda k: 1.0 / math.factorial(k),
        "limit": lambda z: cmath.exp(z) if isinstance(z, complex) else math.exp(z),
    },
    "log1p": {
        # log(1+z) = z - z^2/2 + z^3/3 - ...
        "coefficient": lambda k: 0.0 if k == 0 else (-1.0) ** (k + 1) / k,
        "limit": lambda z: cmath.log(1 + z) if isinstance(z, complex) else math.log1p(z),
    },
    "geometric": {
        "coefficient": lambda k: 1.0,
        "limit": lambda z: 1.0 / (1.0 - z),
    },
}

def power_series_coefficients(name: str, count: int) -> list:
    """Coefficients gamma_0 .. gamma_{count-1} of a named power series."""
    try:
        series = _POWER_SERIES[name]
    except KeyError:
        raise InvalidParameterError(
            f"unknown power series {name!r}; choose from {', '.join(_POWER_SERIES)}"
        ) from None
    return [series["coefficient"](k) for k in range(count)]


def euler_factorial_coefficients(count: int) -> list:
    """Coefficients k! (-1)^k of the divergent factorial series in x."""
    return [math.factorial(k) * (-1.0) ** k for k in range(count)]


PROBLEM_FAMILIES = (
    "zeta_dirichlet",
    "power_series",
    "euler_factorial",
    "decay_model",
    "geometric",
    "exponential_sum",
)


@dataclass(frozen=True)
class ProblemSpec:
    """A named test problem: family, parameters, and length N (indices 0..N)."""

    family: str
    length: int
    params: Mapping = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", dict(self.params))
        if self.family not in PROBLEM_FAMILIES:
            raise InvalidParameterError(
                f"unknown problem family {self.family!r}; "
                f"choose from {', '.join(PROBLEM_FAMILIES)}"
            )
        if self.length < 0:
            raise InvalidParameterError("length must be nonnegative")

    def describe(self) -> str:
        inner = ":".join(
            f"{key}={value}" for key, value in sorted(self.params.items())
        )
        parts = [self.family, inner, f"N={self.length}"]
        return ":".join(p for p in parts if p)


def _param(spec: ProblemSpec, name: str, default=None):
    if name in spec.params:
        return spec.params[name]
    if default is not None:
        return default
    raise InvalidParameterError(f"{spec.family} needs parameter {name!r}")


def generate_problem(spec: ProblemSpec) -> SequenceSample:
    """Terms, partial sums, and the known (anti)limit for a corpus problem."""
    count = spec.length + 1
    family = spec.family

    if family == "zeta_dirichlet":
        z = spec.params.get("z")
        if z is None:
            raise InvalidParameterError("zeta_dirichlet needs parameter 'z'")
        if _real_part(z) <= 1:
            raise InvalidParameterError("zeta_dirichlet needs Re z > 1")
        terms = [(nu + 1) ** (-z) for nu in range(count)]
        sample = make_partial_sums(terms)
        return SequenceSample(sample.values, sample.terms, limit=euler_maclaurin_zeta(z))

    if family == "power_series":
        name = _param(spec, "name")
        z = _param(spec, "z")
        coefficients = power_series_coefficients(name, count)
        terms = [g * z ** k for k, g in enumerate(coefficients)]
        sample = make_partial_sums(terms)
        limit = None
        try:
            limit = _POWER_SERIES[name]["limit"](z)
        except (ValueError, ZeroDivisionError):
            pass  # pole or branch point: no limit attached
        return SequenceSample(sample.values, sample.terms, limit=limit)

    if family == "euler_factorial":
        x = _param(spec, "x")
        if not x > 0:
            raise InvalidParameterError("euler_factorial needs x > 0")
        terms = [g * x ** k for k, g in enumerate(euler_factorial_coefficients(count))]
        sample = make_partial_sums(terms)
        return SequenceSample(sample.values, sample.terms, limit=euler_series_value(x))

    if family == "decay_model":
        s = _param(spec, "s", 0.0)
        alpha = _param(spec, "alpha")
        beta = _param(spec, "beta", 1.0)
        c0 = _param(spec, "c0", 1.0)
        c1 = spec.params.get("c1", 0.0)
        if not alpha > 0 or not beta > 0:
            raise InvalidParameterError("decay_model needs alpha > 0 and beta > 0")
        values = [
            s + (n + beta) ** (-alpha) * (c0 + c1 / (n + beta)) for n in range(count)
        ]
        return SequenceSample(tuple(values), limit=s)

    if family == "geometric":
        s = _param(spec, "s", 0.0)
        c = _param(spec, "c")
        lam = _param(spec, "lam")
        values = [s + c * lam ** n for n in range(count)]
        terms = [values[0]] + [values[n] - values[n - 1] for n in range(1, count)]
        return SequenceSample(tuple(values), terms=tuple(terms), limit=s)

    if family == "exponential_sum":
        s = _param(spec, "s", 0.0)
        cs = list(_param(spec, "c"))
        lams = list(_param(spec, "lam"))
        if len(cs) != len(lams) or not cs:
            raise InvalidParameterError(
                "exponential_sum needs equally long nonempty 'c' and 'lam' lists"
            )
        values = [
            s + sum(cj * lj ** n for cj, lj in zip(cs, lams)) for n in range(count)
        ]
        terms = [values[0]] + [values[n] - values[n - 1] for n in range(1, count)]
        return SequenceSample(tuple(values), terms=tuple(terms), limit=s)

    raise InvalidParameterError(f"unknown problem family {family!r}")
