"""Sequence extrapolation: Richardson and the Wynn epsilon algorithm."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .errors import DomainError, NumericalFailure

WYNN_GUARD = 1e-14


class ExtrapolationMethod(str, Enum):
    RICHARDSON = "richardson"
    WYNN_EPSILON = "wynn_epsilon"


@dataclass(frozen=True)
class ExtrapolationTable:
    """Base samples, the triangular table built from them, and the pick.

    ``estimates[m]`` is column ``m`` of the table (``estimates[0]`` are the
    raw values). Entries the Wynn guard rejected are ``None``.
    """

    base: tuple[tuple[float, float], ...]
    estimates: tuple[tuple[Optional[float], ...], ...]
    best: float
    est_error: float
    method: ExtrapolationMethod
    best_column: int = field(default=0)


def _check_base(values: Sequence[float]) -> None:
    if len(values) < 3:
        raise DomainError(f"extrapolation needs at least 3 samples, got {len(values)}")


def richardson(
    base: Sequence[tuple[float, float]],
    order: int,
    exponent_step: float = 1.0,
    exponents: Optional[Sequence[float]] = None,
) -> ExtrapolationTable:
    """Richardson extrapolation of samples ``(h, f(h))`` towards ``h = 0``.

    By default the error is taken to be a power series in ``h**exponent_step``
    and column ``m`` removes its ``m``-th term. This is the Neville form of
    polynomial extrapolation, so any strictly decreasing ``h`` works. Passing
    ``exponents`` removes ``h**exponents[m-1]`` in column ``m`` instead; a
    repeated exponent also removes ``h**p * log(h)`` terms. That form needs
    geometric ``h``.

    ``best`` is the last entry of column ``order`` and ``est_error`` its
    distance to the last entry of the column before.
    """
    base = tuple((float(h), float(v)) for h, v in base)
    _check_base(base)
    hs = [h for h, _ in base]
    if any(h <= 0.0 for h in hs):
        raise DomainError("step sizes must be positive")
    if any(not b < a for a, b in zip(hs, hs[1:])):
        raise DomainError("step sizes must be strictly decreasing (repeated h?)")
    if not exponent_step > 0:
        raise DomainError(f"exponent_step must be positive, got {exponent_step!r}")
    if not 0 <= order <= len(base) - 1:
        raise DomainError(f"order must lie in 0..{len(base) - 1}, got {order}")
    if exponents is not None:
        if len(exponents) < order:
            raise DomainError("need one exponent per eliminated column")
        ratios = [a / b for a, b in zip(hs, hs[1:])]
        if max(ratios) - min(ratios) > 1e-12 * ratios[0]:
            raise DomainError("explicit exponents require geometric step sizes")

    columns = [[v for _, v in base]]
    for m in range(1, order + 1):
        prev = columns[-1]
        col = []
        for i in range(len(prev) - 1):
            if exponents is None:
                r = (hs[i] / hs[i + m]) ** exponent_step
            else:
                r = (hs[i] / hs[i + 1]) ** exponents[m - 1]
            col.append(prev[i + 1] + (prev[i + 1] - prev[i]) / (r - 1.0))
        columns.append(col)

    best = columns[-1][-1]
    if order == 0:
        est = abs(columns[0][-1] - columns[0][-2])
    else:
        est = abs(best - columns[-2][-1])
    return ExtrapolationTable(
        base=base,
        estimates=tuple(tuple(c) for c in columns),
        best=best,
        est_error=est,
        method=ExtrapolationMethod.RICHARDSON,
        best_column=order,
    )


def wynn_epsilon(
    base_values: Sequence[float],
    max_order: int,
    indices: Optional[Sequence[float]] = None,
) -> ExtrapolationTable:
    """Wynn's epsilon algorithm up to column ``2 * max_order``.

    A denominator smaller than ``WYNN_GUARD`` times the local magnitude marks
    the entry unusable, and so is everything built on it. Each even column
    ``2k`` contributes its last usable entry (its corner). Column 2 is taken
    if usable. A deeper column is taken only while the corner-to-corner step
    keeps shrinking. ``est_error`` is the last accepted step.
    """
    values = [float(v) for v in base_values]
    _check_base(values)
    if max_order < 1 or len(values) < 2 * max_order + 1:
        raise DomainError(
            f"max_order={max_order} needs at least {2 * max_order + 1} values, got {len(values)}"
        )
    if indices is None:
        indices = range(len(values))
    base = tuple((float(i), v) for i, v in zip(indices, values))

    columns: list[list[Optional[float]]] = [list(values)]
    prev: list[Optional[float]] = [0.0] * (len(values) + 1)
    cur: list[Optional[float]] = list(values)
    for _ in range(2 * max_order):
        nxt: list[Optional[float]] = []
        for i in range(len(cur) - 1):
            a, b, c = cur[i], cur[i + 1], prev[i + 1]
            if a is None or b is None or c is None:
                nxt.append(None)
                continue
            d = b - a
            scale = max(abs(a), abs(b))
            if abs(d) <= WYNN_GUARD * scale or d == 0.0:
                nxt.append(None)
            else:
                nxt.append(c + 1.0 / d)
        prev, cur = cur, nxt
        columns.append(nxt)

    def corner(col):
        for v in reversed(col):
            if v is not None:
                return v
        return None

    best = corner(columns[2])
    if best is None:
        raise NumericalFailure("Wynn epsilon: every accelerated column is unusable")
    best_col = 2
    step = abs(best - values[-1])
    for k in range(4, 2 * max_order + 1, 2):
        c = corner(columns[k])
        if c is None:
            break
        new_step = abs(c - best)
        if new_step > step:
            break
        best, step, best_col = c, new_step, k

    return ExtrapolationTable(
        base=base,
        estimates=tuple(tuple(c) for c in columns),
        best=best,
        est_error=step,
        method=ExtrapolationMethod.WYNN_EPSILON,
        best_column=best_col,
    )


def digits_gained(target: float, naive_value: float, accelerated_value: float) -> float:
    """Decimal digits of error removed by acceleration."""
    if target == 0.0:
        raise DomainError("target must be nonzero")
    naive_err = abs(naive_value - target)
    acc_err = max(abs(accelerated_value - target), 1e-300)
    if naive_err == 0.0:
        return 0.0 if acc_err <= 1e-300 else -math.inf
    return math.log10(naive_err / acc_err)


def dyadic_schedule(budget: int, max_points: int = 7) -> list[int]:
    """Doubling schedule ``N_j = c * 2^j`` (``c >= 2``) ending at or under ``budget``.

    Partial sums whose error is a power series in ``1/N`` become sums of
    geometric sequences in ``j`` along a doubling schedule. That is the
    structure Wynn epsilon removes exactly.
    """
    if budget < 8:
        raise DomainError(f"budget must be at least 8 terms, got {budget}")
    points = min(max_points, int(math.log2(budget / 2)) + 1)
    c = budget >> (points - 1)
    return [c << j for j in range(points)]
