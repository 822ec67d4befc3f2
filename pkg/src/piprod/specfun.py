"""Real-argument zeta and log-gamma kernels.

Everything here works in native doubles. The shared workhorse is
:func:`power_tail`, the sum of ``n**-s`` over ``n > N``, evaluated as a short
direct sum followed by an Euler-Maclaurin remainder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

# B_2, B_4, ..., B_22
_BERNOULLI_EVEN = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
    Fraction(854513, 138),
)

# B_2j / (2j)!  for the Euler-Maclaurin remainder
_EM_COEFFS = tuple(
    float(b / math.factorial(2 * j)) for j, b in enumerate(_BERNOULLI_EVEN, start=1)
)

# B_2j / (2j (2j-1))  for the Stirling series
_STIRLING_COEFFS = tuple(
    float(b / (2 * j * (2 * j - 1))) for j, b in enumerate(_BERNOULLI_EVEN, start=1)
)

_EM_MIN_START = 20
_STIRLING_MIN_X = 12.0
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _em_remainder(s: float, m: int) -> float:
    """Euler-Maclaurin estimate of sum_{n >= m} n**-s (needs m > s/6 or so)."""
    lead = m ** (1.0 - s)
    if lead == 0.0:
        return 0.0
    parts = [lead / (s - 1.0), 0.5 * m ** (-s)]
    # (s)_{2j-1} * m**(-s-2j+1), advanced by two rising-factorial steps per j
    r = s * m ** (-s - 1.0)
    inv_m2 = 1.0 / (m * m)
    for j, c in enumerate(_EM_COEFFS, start=1):
        term = c * r
        parts.append(term)
        if abs(term) < 1e-18 * parts[0]:
            break
        r *= (s + 2 * j - 1) * (s + 2 * j) * inv_m2
    return math.fsum(parts)


def power_tail(s: float, N: int) -> float:
    """Return ``sum_{n > N} n**-s`` for real ``s > 1`` and integer ``N >= 0``.

    Terms below an adaptive start index are summed directly; the rest is the
    Euler-Maclaurin remainder. The start is pushed past ``s`` so that the
    Bernoulli corrections decrease.
    """
    if not s > 1.0:
        raise DomainError(f"power_tail needs s > 1, got {s!r}")
    if N < 0:
        raise DomainError(f"power_tail needs N >= 0, got {N!r}")
    start = max(N + 1, _EM_MIN_START, int(math.ceil(s)) + 1)
    direct = [n ** (-s) for n in range(N + 1, start)]
    direct.append(_em_remainder(s, start))
    return math.fsum(direct)


def zeta(s: float) -> float:
    """Riemann zeta for real ``s >= 2``; absolute error near one ulp."""
    if not s >= 2.0:
        raise DomainError(f"zeta is only provided for s >= 2, got {s!r}")
    return 1.0 + power_tail(s, 1)


def zeta_even_minus_1(k: int) -> float:
    """``zeta(2k) - 1`` summed from ``n = 2`` so no leading 1 is ever cancelled."""
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    return power_tail(2.0 * k, 1)


def log_gamma(x: float) -> float:
    """log Gamma(x) for ``x > 0``.

    Small arguments are promoted with ``Gamma(x+1) = x Gamma(x)`` until
    ``x >= 12``, where the Stirling series through ``B_22`` leaves a
    remainder below 1e-20.
    """
    if not x > 0.0:
        raise DomainError(f"log_gamma needs x > 0, got {x!r}")
    shifts = []
    while x < _STIRLING_MIN_X:
        shifts.append(-math.log(x))
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    parts = [(x - 0.5) * math.log(x), -x, _HALF_LOG_2PI]
    p = inv
    for c in _STIRLING_COEFFS:
        parts.append(c * p)
        p *= inv2
    parts.extend(shifts)
    return math.fsum(parts)


@dataclass(frozen=True)
class ZetaCache:
    """Precomputed ``zeta(2k) - 1`` for ``k = 1..max_k`` plus ``zeta(3)``.

    ``zeta2k_minus_1[k - 1]`` holds the value for ``k``. Use :meth:`even_minus_1`
    for 1-based access.
    """

    max_k: int
    zeta2k_minus_1: tuple[float, ...]
    zeta3: float

    @classmethod
    def build(cls, max_k: int = 60) -> "ZetaCache":
        if max_k < 1:
            raise DomainError(f"max_k must be positive, got {max_k!r}")
        values = tuple(zeta_even_minus_1(k) for k in range(1, max_k + 1))
        return cls(max_k=max_k, zeta2k_minus_1=values, zeta3=zeta(3.0))

    def even_minus_1(self, k: int) -> float:
        if 1 <= k <= self.max_k:
            return self.zeta2k_minus_1[k - 1]
        return zeta_even_minus_1(k)


@lru_cache(maxsize=8)
def zeta_cache(max_k: int = 60) -> ZetaCache:
    """Shared immutable cache; safe to hand to concurrent callers."""
    return ZetaCache.build(max_k)


def apery() -> float:
    return zeta_cache().zeta3
