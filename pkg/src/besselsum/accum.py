"""Compensated (Neumaier) accumulation used for all fixed-order reductions."""
from __future__ import annotations

import math
from typing import Iterable


class NeumaierSum:
    """Running compensated sum; add order defines the result bit for bit."""

    __slots__ = ("_s", "_c")

    def __init__(self) -> None:
        self._s = 0.0
        self._c = 0.0

    def add(self, x: float) -> None:
        s = self._s
        t = s + x
        if abs(s) >= abs(x):
            self._c += (s - t) + x
        else:
            self._c += (x - t) + s
        self._s = t

    @property
    def value(self) -> float:
        return self._s + self._c


def neumaier_sum(values: Iterable[float]) -> float:
    acc = NeumaierSum()
    for v in values:
        if math.isnan(v):
            return math.nan
        acc.add(v)
    return acc.value
