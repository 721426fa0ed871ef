"""Truncated univariate power series with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import IndeterminateOrderError
from .poly import as_rational

DEFAULT_TRUNCATION = 16


class PowerSeries1:
    """``sum c_k t^k`` known for ``k = 0..truncation``.

    ``exact`` marks a series that is a polynomial whose terms are all
    stored, so a zero series is certified zero rather than merely
    unresolved at this truncation.
    """

    __slots__ = ("variable", "truncation", "coefficients", "exact")

    def __init__(self, coefficients: Sequence, truncation: int = DEFAULT_TRUNCATION,
                 variable: str = "t", exact: bool = False):
        coeffs = [as_rational(c) for c in coefficients]
        if len(coeffs) > truncation + 1:
            if any(coeffs[truncation + 1 :]) and exact:
                exact = False
            coeffs = coeffs[: truncation + 1]
        coeffs += [Fraction(0)] * (truncation + 1 - len(coeffs))
        self.variable = variable
        self.truncation = truncation
        self.coefficients = tuple(coeffs)
        self.exact = exact

    @classmethod
    def polynomial(cls, coefficients: Sequence, truncation: int = DEFAULT_TRUNCATION,
                   variable: str = "t") -> "PowerSeries1":
        return cls(coefficients, truncation, variable, exact=len(coefficients) <= truncation + 1)

    def _check(self, other: "PowerSeries1"):
        if self.variable != other.variable:
            raise ValueError(f"series in {self.variable} and {other.variable}")

    def __add__(self, other: "PowerSeries1") -> "PowerSeries1":
        self._check(other)
        n = min(self.truncation, other.truncation)
        return PowerSeries1(
            [a + b for a, b in zip(self.coefficients[: n + 1], other.coefficients[: n + 1])],
            n, self.variable, self.exact and other.exact,
        )

    def scale(self, c) -> "PowerSeries1":
        c = as_rational(c)
        return PowerSeries1([c * a for a in self.coefficients], self.truncation, self.variable,
                            self.exact)

    def __mul__(self, other: "PowerSeries1") -> "PowerSeries1":
        self._check(other)
        n = min(self.truncation, other.truncation)
        a, b = self.coefficients, other.coefficients
        out = [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)]
        # a product of exact polynomials is exact only if nothing spilled past n
        exact = self.exact and other.exact and self._top() + other._top() <= n
        return PowerSeries1(out, n, self.variable, exact)

    def _top(self) -> int:
        nz = [k for k, c in enumerate(self.coefficients) if c]
        return nz[-1] if nz else 0

    def derivative(self) -> "PowerSeries1":
        # the derivative is known one degree less far
        c = self.coefficients
        return PowerSeries1(
            [k * c[k] for k in range(1, len(c))], max(self.truncation - 1, 0), self.variable,
            self.exact,
        )

    def is_certified_zero(self) -> bool:
        return self.exact and not any(self.coefficients)


def series_order(s: PowerSeries1) -> int:
    """Index of the first nonzero coefficient."""
    for k, c in enumerate(s.coefficients):
        if c:
            return k
    if s.is_certified_zero():
        raise ValueError("an identically zero series has no finite order")
    raise IndeterminateOrderError(
        f"series vanishes through t^{s.truncation}; re-run with truncation {2 * max(s.truncation, 1)}"
    )
