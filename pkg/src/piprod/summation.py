"""Compensated accumulation used by every long sum in the package.

``math.fsum`` covers one-shot sums of a finished iterable. ``Accumulator``
covers the streaming case, where running partial sums are needed (prefix
tables, monotonicity checks) and re-summing each prefix would be quadratic.
"""

from __future__ import annotations

from typing import Iterable


class Accumulator:
    """Neumaier running sum: the rounding error of each add is recycled."""

    __slots__ = ("_s", "_c")

    def __init__(self, value: float = 0.0):
        self._s = float(value)
        self._c = 0.0

    def add(self, x: float) -> None:
        s = self._s
        t = s + x
        if abs(s) >= abs(x):
            self._c += (s - t) + x
        else:
            self._c += (x - t) + s
        self._s = t

    def extend(self, xs: Iterable[float]) -> None:
        for x in xs:
            self.add(x)

    @property
    def value(self) -> float:
        return self._s + self._c
