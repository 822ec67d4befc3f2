"""The identity chain running from the odd cube series to the 9/2 product.

Every product is accumulated as a sum of logs. Summands that are a
difference of O(1) logarithms are either assembled from exact integers
before the log is taken or written as power series in ``1/n^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import prodcore
from .accel import ExtrapolationTable, dyadic_schedule, wynn_epsilon
from .errors import DomainError
from .specfun import log_gamma, power_tail
from .summation import Accumulator

LOG_EQ14_CONSTANT = 15 * math.log(2) - 9 * math.log(3) - math.log(64 * math.pi / 243)


def _log_ratio(num: int, den: int) -> float:
    """``log(num/den)`` for positive integers, via log1p of the exact difference."""
    return math.log1p((num - den) / den)


@dataclass(frozen=True)
class SeriesTerm13:
    n: int
    square_bracket: float
    linear_bracket: float
    constant_bracket: float

    @property
    def value(self) -> float:
        return math.fsum([self.square_bracket, self.linear_bracket, self.constant_bracket])


def s_direct(N: int) -> float:
    """``sum_{n<=N} ((-1)^n - 1)^2 / n^3``; only odd ``n`` contribute ``4/n^3``."""
    if N < 1:
        raise DomainError(f"N must be at least 1, got {N!r}")
    return math.fsum(4.0 / n**3 for n in range(1, N + 1, 2))


def odd_cube_tail(N: int) -> float:
    """``sum_{odd n > N} 4/n^3`` from zeta tails: odd terms are all minus evens."""
    m = N // 2  # even n = 2j > N  <=>  j > m
    return 4.0 * (power_tail(3.0, N) - power_tail(3.0, m) / 8.0)


def s_tail_corrected(N: int) -> float:
    return s_direct(N) + odd_cube_tail(N)


def term_1_3(n: int) -> SeriesTerm13:
    """The three-bracket summand, each log argument built from exact integers."""
    if n < 2:
        raise DomainError(f"term needs n >= 2, got {n!r}")
    n2 = n * n
    sq = n2 * _log_ratio((n2 - 1) * 2**8 * n**6, (4 * n2 - 1) ** 4)
    lin = 2 * n * _log_ratio((1 + n) * (2 * n - 1) ** 2, (n - 1) * (1 + 2 * n) ** 2)
    const = math.log1p(-3.0 / (4 * n2 - 1))
    return SeriesTerm13(n, sq, lin, const)


def term_1_3_coeffs(K: int) -> list[float]:
    """Coefficient of ``n^(-2k)`` in :func:`term_1_3`, k = 1..K.

    The brackets expand as ``-(1-4^-k)/(k+1)``, ``4 (1-4^-k)/(2k+1)`` and
    ``-(1-4^-k)/k``.
    """
    out = []
    for k in range(1, K + 1):
        w = 1.0 - 4.0**-k
        out.append(w * (-1.0 / (k + 1) + 4.0 / (2 * k + 1) - 1.0 / k))
    return out


def term_1_4(n: int) -> float:
    """``n^2 log(1 - 1/n^2) - 4 n^2 log(1 - 1/(4n^2))``.

    Both halves are ``log_term`` minus its +1 correction, so the corrections
    cancel: ``term_1_4(n) = log_term(1, n) - log_term(4, n)``.
    """
    if n < 2:
        raise DomainError(f"term needs n >= 2, got {n!r}")
    return prodcore.log_term(1.0, n) - prodcore.log_term(4.0, n)


def sum_term_1_4(N: int = 1000, K: int = 6) -> float:
    """Tail-corrected ``sum_{n>=2} term_1_4(n)``."""
    head = math.fsum(term_1_4(n) for n in range(2, N + 1))
    tail = prodcore.tail_correction(1.0, N, K) - prodcore.tail_correction(4.0, N, K)
    return head + tail


def sum_term_1_3(N: int = 1000, K: int = 6) -> float:
    head = math.fsum(term_1_3(n).value for n in range(2, N + 1))
    return head + prodcore.series_tail(term_1_3_coeffs(K), N)


def gamma_product_lhs(N: int) -> float:
    """log of ``prod_{n=2}^N (1+n)^(2n) (2n-1)^(4n) / ((n-1)^(2n) (1+2n)^(4n))``."""
    if N < 2:
        raise DomainError(f"N must be at least 2, got {N!r}")
    acc = Accumulator()
    for n in range(2, N + 1):
        acc.add(2 * n * math.log(1 + n))
        acc.add(4 * n * math.log(2 * n - 1))
        acc.add(-2 * n * math.log(n - 1))
        acc.add(-4 * n * math.log(1 + 2 * n))
    return acc.value


def gamma_product_rhs(N: int) -> float:
    """log of the exact closed form of the product in :func:`gamma_product_lhs`.

    Telescoping gives, for every ``N >= 2``,

        (81 / (4 pi^2)) N^(2N) (N+1)^(2N) / (N+1/2)^(4N)
            * Gamma(N+1/2)^4 / (Gamma(N)^2 Gamma(N+1)^2).

    The even-index factors contribute ``N^N (N+1)^(N+1) / (2 (N+1)! (N-1)!)``
    squared. The odd-index factors contribute ``81 ((2N-1)!!)^4 / (2N+1)^(4N)``
    with ``(2N-1)!! = 2^N Gamma(N+1/2) / sqrt(pi)``.
    """
    if N < 2:
        raise DomainError(f"N must be at least 2, got {N!r}")
    return _gamma_closed_form(N, N, N + 0.5)


def gamma_product_rhs_printed(N: int) -> float:
    """Same closed form with ``(N+2)^(2N)`` and ``(N+3/2)^(4N)`` in the power factors.

    This variant only matches the product as ``N -> infinity``. The log gap
    shrinks like ``1/N^2``, so the pi limit drawn from it is unaffected.
    """
    if N < 2:
        raise DomainError(f"N must be at least 2, got {N!r}")
    return _gamma_closed_form(N, N + 2, N + 1.5)


def _gamma_closed_form(N: int, first: float, middle: float) -> float:
    return math.fsum(
        [
            math.log(81.0) - math.log(4.0) - 2.0 * math.log(math.pi),
            2 * N * math.log(first),
            2 * N * math.log(N + 1),
            -4 * N * math.log(middle),
            4.0 * log_gamma(N + 0.5),
            -2.0 * log_gamma(N),
            -2.0 * log_gamma(N + 1),
        ]
    )


def superfactorial_identity(N: int) -> tuple[float, float]:
    """(log prod_{n=1}^N (1+n)^n, N log Gamma(N+2) - sum log Gamma(n+1))."""
    if N < 1:
        raise DomainError(f"N must be at least 1, got {N!r}")
    lhs = math.fsum(n * math.log(1 + n) for n in range(1, N + 1))
    rhs = math.fsum([N * log_gamma(N + 2)] + [-log_gamma(n + 1) for n in range(1, N + 1)])
    return lhs, rhs


_EULER92_SERIES_FROM = 32


def euler_92_log_term(n: int) -> float:
    """``n log((n-1)/(n+1)) + 2n log((2n+1)/(2n-1))``.

    As atanh series: ``2 sum_j (4^-j - 1) n^(-2j) / (2j+1)``, used once
    ``n >= 32`` where the direct form cancels two O(1) logs.
    """
    if n < 2:
        raise DomainError(f"term needs n >= 2, got {n!r}")
    if n < _EULER92_SERIES_FROM:
        return n * math.log1p(-2.0 / (n + 1)) + 2 * n * math.log1p(2.0 / (2 * n - 1))
    inv2 = 1.0 / (n * n)
    acc = 0.0
    for j in range(10, 0, -1):
        acc = acc * inv2 + 2.0 * (4.0**-j - 1.0) / (2 * j + 1)
    return acc * inv2


def euler_92_coeffs(K: int) -> list[float]:
    return [2.0 * (4.0**-j - 1.0) / (2 * j + 1) for j in range(1, K + 1)]


def euler_92_log_partials(schedule: list[int]) -> dict[int, float]:
    wanted = set(schedule)
    acc = Accumulator()
    out = {}
    for n in range(2, max(schedule) + 1):
        acc.add(euler_92_log_term(n))
        if n in wanted:
            out[n] = acc.value
    return out


def euler_92_product(N: int) -> float:
    """``(9/2) prod_{n=2}^N (n-1)^n (2n+1)^(2n) / ((n+1)^n (2n-1)^(2n))``."""
    if N < 2:
        raise DomainError(f"N must be at least 2, got {N!r}")
    return 4.5 * math.exp(euler_92_log_partials([N])[N])


def euler_92_tail_corrected(N: int, K: int = 6) -> float:
    """:func:`euler_92_product` with the omitted log tail added through ``n^(-2K)``."""
    if N < 2:
        raise DomainError(f"N must be at least 2, got {N!r}")
    log_sum = euler_92_log_partials([N])[N] + prodcore.series_tail(euler_92_coeffs(K), N)
    return 4.5 * math.exp(log_sum)


def euler_92_extrapolated(budget: int = 200) -> ExtrapolationTable:
    """Wynn epsilon on dyadic trapezoid partials of the log product, as pi estimates."""
    schedule = dyadic_schedule(budget)
    sums = euler_92_log_partials(schedule)
    values = [sums[N] - 0.5 * euler_92_log_term(N) for N in schedule]
    table = wynn_epsilon(values, (len(values) - 1) // 2, indices=schedule)
    best = 4.5 * math.exp(table.best)
    return ExtrapolationTable(
        base=table.base,
        estimates=table.estimates,
        best=best,
        est_error=best * table.est_error,
        method=table.method,
        best_column=table.best_column,
    )
