"""Exact square-root-of-rational quantities.

Bound values and closed-form spectrum values are all of the form
sqrt(num/den). Carrying the radicand exactly lets equality verdicts
compare algebra instead of float round-trips.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ExactSqrt:
    """The nonnegative real number sqrt(radicand)."""

    radicand: Fraction

    def __post_init__(self):
        if self.radicand < 0:
            raise ValueError("radicand must be nonnegative")
        object.__setattr__(self, "radicand", Fraction(self.radicand))

    @staticmethod
    def sqrt_of(value) -> "ExactSqrt":
        return ExactSqrt(Fraction(value))

    @staticmethod
    def integer(k: int) -> "ExactSqrt":
        return ExactSqrt(Fraction(k * k))

    @property
    def value(self) -> float:
        return math.sqrt(self.radicand)

    def __float__(self) -> float:
        return self.value

    def is_perfect_square(self) -> bool:
        num, den = self.radicand.numerator, self.radicand.denominator
        return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den

    def __str__(self) -> str:
        if self.is_perfect_square():
            root = Fraction(math.isqrt(self.radicand.numerator), math.isqrt(self.radicand.denominator))
            return str(root)
        r = self.radicand
        return f"sqrt({r.numerator}/{r.denominator})" if r.denominator != 1 else f"sqrt({r.numerator})"

    def __repr__(self) -> str:
        return f"ExactSqrt({self.radicand!r})"
