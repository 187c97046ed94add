"""Exact dense univariate polynomials over the rationals.

The scalar type is ``fractions.Fraction`` (re-exported as ``Rat``): always
reduced, positive denominator, arbitrary-precision integer parts.  A
polynomial is a tuple of coefficients in the variable ``T``, index ``i``
holding the coefficient of ``T**i``, with no trailing zero at the top.

The canonical text form writes one ``<num>/<den>*T^<k>`` term per nonzero
coefficient, highest degree first, e.g. ``-125/48*T^1 + 25/24*T^0``;
:meth:`Poly.parse` accepts this grammar (plus the obvious shorthands
``T``, ``T^2``, bare constants).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction

#: Degree of the zero polynomial.  A sentinel rather than -1, so degree
#: comparisons and degree sums never silently mix with honest integers.
NEG_INFINITY = float("-inf")

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rat(value: Fraction | int | str) -> Fraction:
    """Coerce to an exact rational.  Floats are rejected: exactness is the point."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational (int/Fraction/'p/q' string), got {value!r}")


@dataclass(frozen=True, init=False)
class Poly:
    """A polynomial in T over the rationals, dense and canonical.

    >>> Poly([-1, 0, 1])
    Poly('1/1*T^2 - 1/1*T^0')
    >>> divmod(Poly([-1, 0, 1]), Poly([1, 1]))
    (Poly('1/1*T^1 - 1/1*T^0'), Poly('0'))
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs=()):
        cs = [as_rat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, value) -> Poly:
        return cls((as_rat(value),))

    @classmethod
    def monomial(cls, power: int, coefficient=1) -> Poly:
        if power < 0:
            raise ValueError("monomial power must be >= 0")
        return cls((_ZERO,) * power + (as_rat(coefficient),))

    # -- structure ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int | float:
        """Degree, or NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of T**power (zero beyond the degree)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return _ZERO

    def leading_coeff(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> Poly:
        """The unitary polynomial self / leading_coeff(self)."""
        lead = self.leading_coeff()
        if lead == 1:
            return self
        inv = 1 / lead
        return Poly([c * inv for c in self.coeffs])

    # -- ring operations ------------------------------------------------

    def __add__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            c = as_rat(other)
            if not c:
                return ZERO
            return Poly([c * a for a in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        p, q = self.coeffs, other.coeffs
        if not p or not q:
            return ZERO
        # iterate the operand with fewer nonzero terms on the outside; the
        # engine multiplies sparse binomials into dense polynomials a lot
        if sum(1 for a in p if a) > sum(1 for b in q if b):
            p, q = q, p
        out = [_ZERO] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q):
                    if b:
                        out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base, n = ONE, self, exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        """Euclidean division: self = quotient*other + remainder, deg rem < deg other."""
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        d = len(other.coeffs) - 1
        rem = list(self.coeffs)
        if len(rem) - 1 < d:
            return ZERO, self
        inv_lead = 1 / other.coeffs[-1]
        body = [(j, c) for j, c in enumerate(other.coeffs[:-1]) if c]
        quot = [_ZERO] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                f = c * inv_lead
                quot[i - d] = f
                off = i - d
                for j, cj in body:
                    rem[off + j] -= f * cj
        return Poly(quot), Poly(rem[:d])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def evaluate(self, point) -> Fraction:
        """Exact evaluation at a rational point (Horner)."""
        t = as_rat(point)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    # -- text form ------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            body = f"{abs(c.numerator)}/{c.denominator}*T^{k}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly('{self}')"

    _TERM_RE = re.compile(
        r"""^(?P<sign>-)?\s*
            (?:
                (?P<num>\d+)(?:/(?P<den>\d+))?(?:\*T(?:\^(?P<e1>\d+))?)?
              | T(?:\^(?P<e2>\d+))?
            )$""",
        re.VERBOSE,
    )

    @classmethod
    def parse(cls, text: str) -> Poly:
        """Parse the canonical text form (and its shorthands).

        >>> Poly.parse("-125/48*T^1 + 25/24*T^0")
        Poly('-125/48*T^1 + 25/24*T^0')
        >>> Poly.parse("T^2 - 1") == Poly([-1, 0, 1])
        True
        """
        cleaned = text.strip()
        if cleaned in ("", "0"):
            return ZERO
        pieces = [p.strip() for p in cleaned.replace("-", "+-").split("+")]
        coeffs: dict[int, Fraction] = {}
        for piece in pieces:
            if not piece:
                continue
            m = cls._TERM_RE.match(piece)
            if m is None:
                raise ValueError(f"cannot parse polynomial term {piece!r} in {text!r}")
            if m.group("num") is not None:
                value = Fraction(int(m.group("num")), int(m.group("den") or 1))
                power = 0
                if "*T" in piece:
                    power = int(m.group("e1") or 1)
            else:
                value = _ONE
                power = int(m.group("e2") or 1)
            if m.group("sign"):
                value = -value
            coeffs[power] = coeffs.get(power, _ZERO) + value
        if not coeffs:
            return ZERO
        out = [_ZERO] * (max(coeffs) + 1)
        for power, value in coeffs.items():
            out[power] = value
        return cls(out)


ZERO = Poly()
ONE = Poly((_ONE,))
T = Poly((_ZERO, _ONE))


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor; gcd(p, 0) is monic(p)."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    while q:
        p, q = q, p % q
    return p.monic()
