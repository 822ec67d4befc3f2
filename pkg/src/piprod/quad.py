"""Quadrature of ``t log(sin(pi t))`` on ``[0, upper]``, ``0 < upper <= 1``.

The integrand has integrable log singularities at ``t = 0`` and ``t = 1``.
A guard panel of width ``GUARD`` is cut off each singular end and mapped by
``distance = exp(-v)``, which turns the log blow-up into a smooth integrand
decaying like ``v exp(-v)``. All pieces go through one adaptive
Gauss-Kronrod (7, 15) engine with a shared panel budget.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, NumericalFailure

GUARD = 1e-3
DEFAULT_TOL = 1e-12
DEFAULT_MAX_PANELS = 4096

# past these cut-offs the mapped integrands integrate to < 1e-32
_V_MAX_LEFT = 40.0
_V_MAX_RIGHT = 80.0

_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
# Gauss weights for _XGK[1], _XGK[3], _XGK[5], _XGK[7]
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    panels: int
    converged: bool


def _gk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    kron = _WGK[7] * fc
    gauss = _WG[3] * fc
    for i in range(7):
        dx = h * _XGK[i]
        pair = f(c - dx) + f(c + dx)
        kron += _WGK[i] * pair
        if i % 2 == 1:
            gauss += _WG[i // 2] * pair
    return kron * h, abs((kron - gauss) * h)


def adaptive_gk(
    pieces: list[tuple[Callable[[float], float], float, float]],
    tol: float,
    max_panels: int,
) -> QuadratureResult:
    """Globally adaptive bisection over several (integrand, a, b) pieces.

    The panel with the largest error estimate is split until the summed
    estimate drops under ``tol`` or the panel budget runs out.
    """
    # entries: (-err, seq, piece index, a, b, value); seq breaks ties deterministically
    heap = []
    for i, (f, a, b) in enumerate(pieces):
        val, err = _gk15(f, a, b)
        heap.append((-err, i, i, a, b, val))
    seq = len(heap)
    heapq.heapify(heap)
    total_err = math.fsum(-item[0] for item in heap)
    while total_err > tol and len(heap) < max_panels:
        worst = heapq.heappop(heap)
        _, _, i, a, b, _ = worst
        m = 0.5 * (a + b)
        if not a < m < b:
            heapq.heappush(heap, worst)
            break
        f = pieces[i][0]
        for lo, hi in ((a, m), (m, b)):
            val, err = _gk15(f, lo, hi)
            heapq.heappush(heap, (-err, seq, i, lo, hi, val))
            seq += 1
        total_err = math.fsum(-item[0] for item in heap)
    ordered = sorted(heap, key=lambda item: (item[2], item[3]))
    value = math.fsum(item[5] for item in ordered)
    return QuadratureResult(value, total_err, len(heap), total_err <= tol)


def log_sin_pi_small(t: float) -> float:
    """``log(sin(pi t))`` for ``0 < t <= 1/2``, split as log(pi t) + log(sinc)."""
    z = math.pi * t
    return math.log(z) + math.log(math.sin(z) / z)


def log_sin_pi(t: float) -> float:
    """``log(sin(pi t))`` on ``(0, 1)``; the upper half goes through ``1 - t``."""
    if t <= 0.5:
        return log_sin_pi_small(t)
    return log_sin_pi_small(1.0 - t)


def _middle(t: float) -> float:
    return t * log_sin_pi(t)


def _left_mapped(v: float) -> float:
    # t = exp(-v), dt = -t dv
    t = math.exp(-v)
    return t * t * log_sin_pi_small(t)


def _right_mapped(v: float) -> float:
    # s = 1 - t = exp(-v)
    s = math.exp(-v)
    return (1.0 - s) * s * log_sin_pi_small(s)


def integrate_t_logsin(
    upper: float, tol: float = DEFAULT_TOL, max_panels: int = DEFAULT_MAX_PANELS
) -> QuadratureResult:
    """Integral of ``t log(sin(pi t))`` over ``[0, upper]``.

    Non-convergence within ``max_panels`` is reported through
    ``converged=False`` rather than raised.
    """
    if not 0.0 < upper <= 1.0:
        raise DomainError(f"upper limit must lie in (0, 1], got {upper!r}")
    if upper <= GUARD:
        pieces = [(_left_mapped, -math.log(upper), _V_MAX_LEFT)]
    else:
        pieces = [(_left_mapped, -math.log(GUARD), _V_MAX_LEFT)]
        mid_hi = min(upper, 1.0 - GUARD)
        pieces.append((_middle, GUARD, mid_hi))
        if upper > 1.0 - GUARD:
            gap = 1.0 - upper
            v_hi = _V_MAX_RIGHT if gap == 0.0 else min(-math.log(gap), _V_MAX_RIGHT)
            pieces.append((_right_mapped, -math.log(GUARD), v_hi))
    return adaptive_gk(pieces, tol, max_panels)


def integrate_t_logsin_between(
    lower: float, upper: float, tol: float = DEFAULT_TOL, max_panels: int = DEFAULT_MAX_PANELS
) -> QuadratureResult:
    """Integral over ``[lower, upper]`` inside ``(0, 1)``, plain adaptive panels.

    Only meant for sub-intervals bounded away from the singular endpoints.
    """
    if not 0.0 < lower < upper < 1.0:
        raise DomainError(f"need 0 < lower < upper < 1, got {lower!r}, {upper!r}")
    return adaptive_gk([(_middle, lower, upper)], tol, max_panels)


def r_of_y(y: float) -> float:
    """``2 y * integral_0^{1/sqrt(y)} t log(sin(pi t)) dt`` for ``y >= 1``."""
    value, _ = r_of_y_with_error(y)
    return value


def r_of_y_with_error(y: float) -> tuple[float, float]:
    if not y >= 1.0:
        raise DomainError(f"R(y) is only defined here for y >= 1, got {y!r}")
    res = integrate_t_logsin(1.0 if y == 1.0 else 1.0 / math.sqrt(y))
    if not res.converged:
        raise NumericalFailure(
            f"quadrature for R({y!r}) did not converge: "
            f"error estimate {res.abs_error_estimate:.3g} after {res.panels} panels"
        )
    return 2.0 * y * res.value, 2.0 * y * res.abs_error_estimate
