"""The normalising function A(y) and the pi product built on it.

For ``y > 1/4`` the corrected product ``prod_{n>=2} (1 - 1/(y n^2))^(y n^2) e``
converges to ``1/A(y)``, where

    log A(y) = sum_{k>=1} (zeta(2k) - 1) / ((k + 1) y^k)

and, for ``y > 1``, also

    A(y) = (1 - 1/y)^y exp(3/2 + R(y)) / sin(pi / sqrt(y)).

At ``y = 1`` the closed form is 0/0 and only the series is used. Its value
``A(1) = e^(3/2) / pi`` is what turns the corrected product into a formula
for pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import prodcore
from .accel import ExtrapolationTable, dyadic_schedule, richardson, wynn_epsilon
from .errors import DomainError, NumericalFailure
from .prodcore import Method
from .quad import r_of_y_with_error
from .specfun import zeta_cache


class AMethod(str, Enum):
    SERIES = "series"
    CLOSED = "closed"


@dataclass(frozen=True)
class AFunctionValue:
    y: float
    log_A: float
    method: AMethod
    truncation_K: int = 0
    est_error: float = 0.0

    @property
    def value(self) -> float:
        return math.exp(self.log_A)


def default_terms(y: float) -> int:
    return 40 if y >= 1.0 else 60


def log_A_series(y: float, K: int | None = None) -> AFunctionValue:
    """Truncated zeta series for ``log A(y)``.

    ``est_error`` is the first omitted term over ``1 - 1/(4y)``, the
    geometric majorant of everything left out.
    """
    if not y > 0.25:
        raise DomainError(f"A(y) needs y > 1/4, got {y!r}")
    if K is None:
        K = default_terms(y)
    cache = zeta_cache()
    if not 1 <= K <= cache.max_k:
        raise DomainError(f"K must lie in 1..{cache.max_k}, got {K!r}")
    inv_y = 1.0 / y
    parts = []
    p = 1.0
    for k in range(1, K + 1):
        p *= inv_y
        parts.append(cache.even_minus_1(k) / (k + 1) * p)
    omitted = cache.even_minus_1(K + 1) / (K + 2) * p * inv_y
    return AFunctionValue(
        y=y,
        log_A=math.fsum(parts),
        method=AMethod.SERIES,
        truncation_K=K,
        est_error=omitted / (1.0 - 0.25 * inv_y),
    )


def A_closed(y: float) -> AFunctionValue:
    """Closed form through the log-sine integral R(y); needs ``y > 1``."""
    if not y > 1.0:
        raise DomainError(f"closed form needs y > 1 (y = 1 is the 0/0 case), got {y!r}")
    r, r_err = r_of_y_with_error(y)
    log_sin = math.log(math.sin(math.pi / math.sqrt(y)))
    log_A = math.fsum([-log_sin, y * math.log1p(-1.0 / y), 1.5, r])
    return AFunctionValue(y=y, log_A=log_A, method=AMethod.CLOSED, est_error=r_err)


def p_ratio(x: float, y: float) -> float:
    """``P(x, y) = A(y) / A(x)``, both from the series."""
    return math.exp(log_A_series(y).log_A - log_A_series(x).log_A)


def limit_sample(h: float) -> float:
    """``(1 - 1/x)^(-x) sin(pi / sqrt(x))`` at ``x = 1 + h``, cancellation-free.

    ``1 - 1/x`` is formed as ``h/x``. ``sin(pi/sqrt(x))`` becomes
    ``sin(pi (1 - 1/sqrt(x)))``, with ``1 - 1/sqrt(x) = h / ((1 + sqrt x) sqrt x)``.
    """
    x = 1.0 + h
    rx = math.sqrt(x)
    return math.exp(-x * math.log(h / x)) * math.sin(math.pi * h / ((1.0 + rx) * rx))


# h^m log(h)^p with p <= m appear in the expansion, so exponent m repeats m+1 times
_LIMIT_EXPONENTS = tuple(m for m in range(1, 7) for _ in range(m + 1))


def limit_table(j_start: int = 4, j_stop: int = 20) -> ExtrapolationTable:
    """Richardson table for the ``x -> 1`` limit on ``x_j = 1 + 2^-j``."""
    base = [(2.0**-j, limit_sample(2.0**-j)) for j in range(j_start, j_stop + 1)]
    return richardson(base, order=len(base) - 1, exponents=_LIMIT_EXPONENTS)


def limit_at_one() -> float:
    table = limit_table()
    if not math.isfinite(table.best) or table.est_error > 1e-6:
        raise NumericalFailure(f"limit extrapolation unstable (est_error={table.est_error:.3g})")
    return table.best


def trapezoid_partials(x: float, schedule: list[int]) -> list[float]:
    """Partial log sums with the last term halved, at each ``N`` in ``schedule``.

    Halving the last term leaves an error with odd powers of ``1/N`` only,
    which halves the work Wynn epsilon has to do.
    """
    sums = prodcore.partials_at(x, schedule)
    return [sums[N] - 0.5 * prodcore.log_term(x, N) for N in schedule]


def extrapolated_log_limit(x: float, budget: int) -> ExtrapolationTable:
    """Wynn epsilon over dyadic trapezoid partials using at most ``budget`` terms."""
    schedule = dyadic_schedule(budget)
    values = trapezoid_partials(x, schedule)
    return wynn_epsilon(values, (len(values) - 1) // 2, indices=schedule)


def log_product_limit(x: float, method: Method | str, terms: int) -> float:
    """Estimate of ``sum_{n>=2} log_term(x, n)`` by the given method."""
    method = Method(method)
    if method is Method.SERIES:
        return -log_A_series(x, terms).log_A
    if terms < 2:
        raise DomainError(f"product methods need terms >= 2, got {terms!r}")
    if method is Method.NAIVE:
        return prodcore.corrected_partial(x, terms).log_value
    if method is Method.TAIL_CORRECTED:
        return prodcore.tail_corrected_partial(x, terms, 6).log_value
    return extrapolated_log_limit(x, terms).best


def pi_from_product(method: Method | str, terms: int) -> float:
    """``e^(3/2)`` times the limit of the corrected unit-scale product."""
    return math.exp(1.5 + log_product_limit(1.0, method, terms))
