"""Log-scaled real numbers for products far outside binary64 range."""
from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ScaledReal:
    """A real number stored as mantissa * exp(log_scale).

    The mantissa is normalized into [1/e, e) by absolute value (zero stays
    zero with log_scale 0), so factorial-sized factors never overflow.
    """

    mantissa: float
    log_scale: float

    @staticmethod
    def from_float(x: float) -> "ScaledReal":
        if x == 0.0:
            return ScaledReal(0.0, 0.0)
        e = math.floor(math.log(abs(x)))
        return ScaledReal(x * math.exp(-e), float(e))

    @staticmethod
    def from_log(log_abs: float, sign: float = 1.0) -> "ScaledReal":
        if sign == 0.0:
            return ScaledReal(0.0, 0.0)
        e = math.floor(log_abs)
        return ScaledReal(math.copysign(math.exp(log_abs - e), sign), float(e))

    def normalized(self) -> "ScaledReal":
        if self.mantissa == 0.0:
            return ScaledReal(0.0, 0.0)
        e = math.floor(math.log(abs(self.mantissa)))
        if e == 0:
            return self
        return ScaledReal(self.mantissa * math.exp(-e), self.log_scale + e)

    def times(self, other: "ScaledReal") -> "ScaledReal":
        return ScaledReal(self.mantissa * other.mantissa,
                          self.log_scale + other.log_scale).normalized()

    def times_float(self, x: float) -> "ScaledReal":
        return ScaledReal.from_float(x).times(self) if x != 0.0 else ScaledReal(0.0, 0.0)

    def to_float(self) -> float:
        """Collapse to binary64; underflows to 0.0, overflow raises."""
        if self.mantissa == 0.0:
            return 0.0
        if self.log_scale > 709.0:
            raise OverflowError(
                f"scaled value exp({self.log_scale:.6g}) too large for binary64")
        if self.log_scale < -745.0 - 2.0:
            return 0.0 * self.mantissa
        return self.mantissa * math.exp(self.log_scale)

    @property
    def sign(self) -> float:
        return math.copysign(1.0, self.mantissa) if self.mantissa != 0.0 else 0.0

    def log_abs(self) -> float:
        if self.mantissa == 0.0:
            return -math.inf
        return math.log(abs(self.mantissa)) + self.log_scale
