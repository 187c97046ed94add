"""Truncated formal Laurent series in 1/T with pluggable coefficient sources.

A series  sum_{i>=1} c_i / T^i  is handled through its first N coefficients,
and the truncation is carried as the exact rational function

    (c_1*T^(N-1) + c_2*T^(N-2) + ... + c_N) / T^N

so that everything downstream runs on exact polynomial arithmetic.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Protocol

from .polynomial import Poly, as_rat


class CoefficientSource(Protocol):
    """Supplier of series coefficients; must be deterministic per index."""

    def coefficient(self, index: int) -> Fraction: ...


class FunctionSource:
    """Adapt a plain function ``index -> rational`` to a coefficient source."""

    def __init__(self, fn: Callable[[int], Fraction | int | str]) -> None:
        self._fn = fn

    def coefficient(self, index: int) -> Fraction:
        return as_rat(self._fn(index))


class SequenceSource:
    """A finite coefficient list followed by zeros (an exactly rational series)."""

    def __init__(self, values) -> None:
        self._values = tuple(as_rat(v) for v in values)

    def coefficient(self, index: int) -> Fraction:
        if index < 1:
            raise ValueError("coefficient indices start at 1")
        if index <= len(self._values):
            return self._values[index - 1]
        return Fraction(0)


class RationalFunctionSource:
    """Coefficients of the series expansion of num/den (deg num < deg den).

    Streams the long division one coefficient at a time and memoizes; safe for
    concurrent queries.
    """

    def __init__(self, num: Poly, den: Poly) -> None:
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if not num.degree < den.degree:
            raise ValueError("expected deg num < deg den (no polynomial part)")
        self._den = den
        self._rem = num
        self._cache: list[Fraction] = []
        self._lock = threading.Lock()

    def coefficient(self, index: int) -> Fraction:
        if index < 1:
            raise ValueError("coefficient indices start at 1")
        with self._lock:
            while len(self._cache) < index:
                quotient, self._rem = divmod(self._rem * Poly.monomial(1), self._den)
                self._cache.append(quotient.coefficient(0))
            return self._cache[index - 1]


@dataclass(frozen=True)
class TruncatedSeries:
    """The first N coefficients of a series, with an optional source for extension."""

    coeffs: tuple[Fraction, ...]
    source: CoefficientSource | None = field(default=None, compare=False, repr=False)

    @property
    def precision(self) -> int:
        """N: how many leading coefficients are known."""
        return len(self.coeffs)

    @classmethod
    def from_source(cls, source: CoefficientSource, precision: int) -> TruncatedSeries:
        if precision < 1:
            raise ValueError("precision must be >= 1")
        coeffs = tuple(as_rat(source.coefficient(i)) for i in range(1, precision + 1))
        return cls(coeffs, source)

    def extend(self, precision: int) -> TruncatedSeries:
        """Same series known to a strictly larger precision.

        Known coefficients are reused, never re-queried, so the prefix is
        stable by construction.
        """
        if self.source is None:
            raise ValueError("cannot extend a series with no attached source")
        if precision <= self.precision:
            raise ValueError(
                f"extension target {precision} is not larger than current precision {self.precision}"
            )
        tail = tuple(
            as_rat(self.source.coefficient(i))
            for i in range(self.precision + 1, precision + 1)
        )
        return TruncatedSeries(self.coeffs + tail, self.source)

    def to_rational(self) -> tuple[Poly, Poly]:
        """The truncation as an exact fraction (num, den) with den = T^N."""
        n = self.precision
        return Poly(reversed(self.coeffs)), Poly.monomial(n)

    def coefficient(self, index: int) -> Fraction:
        """c_index for 1 <= index <= N."""
        if not 1 <= index <= self.precision:
            raise IndexError(f"coefficient index {index} outside 1..{self.precision}")
        return self.coeffs[index - 1]

    def to_json_dict(self) -> dict:
        return {"N": self.precision, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> TruncatedSeries:
        coeffs = tuple(as_rat(c) for c in data["coeffs"])
        if len(coeffs) != data["N"]:
            raise ValueError("series JSON: N does not match the coefficient count")
        return cls(coeffs)
