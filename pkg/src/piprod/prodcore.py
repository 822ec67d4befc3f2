"""Log-space partial products ``prod_{n=2}^N (1 - 1/(x n^2))^(x n^2) * e``.

Each factor tends to 1, but written naively it is ``(~1/e) * e``. Its log is
``x n^2 log(1 - 1/(x n^2)) + 1``, which cancels two O(1) pieces for large
``n``. :func:`log_term` switches to the power series below a threshold.

Products are only ever accumulated as sums of logs. ``Q_N`` alone has
``log Q_N ~ -N`` and underflows long before the interesting range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import DomainError
from .specfun import power_tail
from .summation import Accumulator

SERIES_SWITCH = 1e-3
_SERIES_TERMS = 7


class Method(str, Enum):
    NAIVE = "naive"
    TAIL_CORRECTED = "tail_corrected"
    EXTRAPOLATED = "extrapolated"
    SERIES = "series"


class Convergence(str, Enum):
    CONVERGES_TO_ZERO = "converges_to_zero"
    CONVERGES_NONZERO = "converges_nonzero"
    DIVERGES = "diverges"


@dataclass(frozen=True)
class ProductFamily:
    x: float
    correction_base: float = math.e

    def __post_init__(self):
        _check_scale(self.x)
        if not self.correction_base > 0.0:
            raise DomainError(f"correction base must be positive, got {self.correction_base!r}")

    def log_factor(self, n: int) -> float:
        """log of ``(1 - 1/(x n^2))^(x n^2) * a``."""
        if self.correction_base == math.e:
            return log_term(self.x, n)
        return log_term(self.x, n) - 1.0 + math.log(self.correction_base)


@dataclass(frozen=True)
class PartialEvaluation:
    n_terms: int
    log_value: float
    tail_estimate: float = 0.0
    method: Method = Method.NAIVE

    @property
    def value(self) -> float:
        return math.exp(self.log_value)


def _check_scale(x: float) -> None:
    if not x > 0.25:
        raise DomainError(f"scale x must exceed 1/4, got {x!r}")


def log_term(x: float, n: int) -> float:
    """Return ``x n^2 log(1 - 1/(x n^2)) + 1``.

    For ``u = 1/(x n^2) < 1e-3`` the value is ``-sum_k u^k / (k+1)``; seven
    terms leave a truncation below ``u^7/8``, i.e. under 1e-16 relative.
    """
    _check_scale(x)
    if n < 2:
        raise DomainError(f"product index starts at 2, got {n!r}")
    u = 1.0 / (x * n * n)
    if u < SERIES_SWITCH:
        # Horner on  u * (1/2 + u/3 + u^2/4 + ...)
        acc = 0.0
        for k in range(_SERIES_TERMS, 0, -1):
            acc = acc * u + 1.0 / (k + 1)
        return -u * acc
    return math.log1p(-u) / u + 1.0


def iter_partials(x: float, n_stop: int) -> Iterator[tuple[int, float]]:
    """Yield ``(N, sum_{n=2}^N log_term(x, n))`` for ``N = 2..n_stop``."""
    acc = Accumulator()
    for n in range(2, n_stop + 1):
        acc.add(log_term(x, n))
        yield n, acc.value


def partials_at(x: float, schedule: Iterable[int]) -> dict[int, float]:
    """Compensated log partial sums at every ``N`` in ``schedule``, one pass."""
    wanted = sorted(set(schedule))
    if not wanted:
        return {}
    if wanted[0] < 2:
        raise DomainError("partial products start at N = 2")
    targets = set(wanted)
    return {N: s for N, s in iter_partials(x, wanted[-1]) if N in targets}


def corrected_partial(x: float, N: int) -> PartialEvaluation:
    _check_scale(x)
    if N < 2:
        raise DomainError(f"N must be at least 2, got {N!r}")
    log_value = math.fsum(log_term(x, n) for n in range(2, N + 1))
    return PartialEvaluation(N, log_value)


def q_partial(N: int) -> PartialEvaluation:
    """``Q_N`` (scale 1, no e-correction) in log form."""
    p = corrected_partial(1.0, N)
    return PartialEvaluation(N, p.log_value - (N - 1))


def u_partial(N: int) -> PartialEvaluation:
    """``U_N`` (scale 4, no e-correction) in log form."""
    p = corrected_partial(4.0, N)
    return PartialEvaluation(N, p.log_value - (N - 1))


def p_partial(N: int) -> PartialEvaluation:
    """``P_N = Q_N / U_N`` as a difference of log sums."""
    return PartialEvaluation(N, q_partial(N).log_value - u_partial(N).log_value)


def series_tail(coeffs: Iterable[float], N: int) -> float:
    """``sum_k c_k * sum_{n>N} n^(-2k)`` for a summand expanded in ``n^-2``.

    ``coeffs[k-1]`` multiplies ``n^(-2k)``.
    """
    return math.fsum(c * power_tail(2.0 * k, N) for k, c in enumerate(coeffs, start=1) if c)


def log_term_coeffs(x: float, K: int) -> list[float]:
    """Coefficients of ``n^(-2k)`` in the expansion of :func:`log_term`."""
    return [-1.0 / ((k + 1) * x**k) for k in range(1, K + 1)]


def tail_correction(x: float, N: int, K: int) -> float:
    """Estimate of ``sum_{n>N} log_term(x, n)`` through ``n^(-2K)``.

    The neglected part is O(N^-(2K+1)).
    """
    _check_scale(x)
    if N < 2 or K < 1:
        raise DomainError(f"need N >= 2 and K >= 1, got N={N!r}, K={K!r}")
    return series_tail(log_term_coeffs(x, K), N)


def tail_corrected_partial(x: float, N: int, K: int = 6) -> PartialEvaluation:
    base = corrected_partial(x, N)
    tail = tail_correction(x, N, K)
    return PartialEvaluation(N, base.log_value + tail, tail, Method.TAIL_CORRECTED)


def classify(a: float, x: float) -> Convergence:
    """Limit behaviour of ``prod_n (1 - 1/(x n^2))^(x n^2) * a``.

    The factors tend to ``a/e``, so only ``a = e`` keeps the product finite
    and nonzero. ``a`` within one ulp of ``e`` counts as equal.
    """
    if not a > 0.0:
        raise DomainError(f"a must be positive, got {a!r}")
    _check_scale(x)
    if abs(a - math.e) <= math.ulp(math.e):
        return Convergence.CONVERGES_NONZERO
    return Convergence.CONVERGES_TO_ZERO if a < math.e else Convergence.DIVERGES
