"""Closed-form description of the word series' continued fraction.

Past the four opening quotients, the expansion proceeds in blocks of four:
block n (n >= 1) supplies quotients 4n+1 .. 4n+4, each a rational leading
coefficient times a monic factor.  The leading coefficients come from two
rational scaling sequences

    scale_r(n) = (4/25) * combined_length(n)        (12/25, 32/25, 76/25, ...)
    scale_s(n) = scale_r(n+1) + scale_r(n)

and the monic factors are (T-1) in the even positions and two explicit
quotient polynomials, factor_a(n) and factor_b(n), in the odd ones.  The
monic continuant denominators at ranks 4n and 4n+2 also have closed forms,
``predicted_denominator``.  `check_identity` turns the algebraic identities
tying all of this together into executable checks that return residual
witnesses rather than bare booleans.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .expansion import CFExpansion, convergent
from .polynomial import ONE, Poly, T
from .word import combined_length, stage_length

_T_MINUS_1 = T - ONE

#: The four opening partial quotients: T-2, T/2+1/4, 8T/5+76/25, -125T/48+25/24.
_INITIAL_QUOTIENTS = (
    Poly([-2, 1]),
    Poly([Fraction(1, 4), Fraction(1, 2)]),
    Poly([Fraction(76, 25), Fraction(8, 5)]),
    Poly([Fraction(25, 24), Fraction(-125, 48)]),
)

#: Monic numerators of the convergents at ranks 4 and 6 (block 1).
_INITIAL_NUMERATORS = (
    Poly([-1, 1, 2, 1]),             # T^3 + 2T^2 + T - 1
    Poly([2, 1, 2, 1, 2, 2, 1]),     # T^6 + 2T^5 + 2T^4 + T^3 + 2T^2 + T + 2
)


def initial_quotients() -> tuple[Poly, Poly, Poly, Poly]:
    """The fixed opening quotients a_1..a_4."""
    return _INITIAL_QUOTIENTS


def initial_numerators() -> tuple[Poly, Poly]:
    """Monic numerators of the rank-4 and rank-6 convergents."""
    return _INITIAL_NUMERATORS


@lru_cache(maxsize=None)
def scale_r(n: int) -> Fraction:
    """Primary scaling sequence, (4/25) * combined_length(n); n >= 1."""
    if n < 1:
        raise ValueError("scale_r is defined for n >= 1")
    return Fraction(4, 25) * combined_length(n)


def scale_s(n: int) -> Fraction:
    """Secondary scaling sequence, scale_r(n+1) + scale_r(n); n >= 1."""
    return scale_r(n + 1) + scale_r(n)


def predicted_leading_coeff(i: int) -> Fraction:
    """Leading coefficient of the i-th partial quotient, i >= 1.

    Within block n the four values are, with sign (-1)^(n+1):
    r_n^2, 1/(r_n*s_n), s_n^2, 1/(r_{n+1}*s_n) for r = scale_r, s = scale_s.
    """
    if i < 1:
        raise ValueError("quotient indices start at 1")
    if i <= 4:
        return _INITIAL_QUOTIENTS[i - 1].leading_coeff()
    n, j = (i - 1) // 4, (i - 1) % 4 + 1
    sign = (-1) ** (n + 1)
    if j == 1:
        return sign * scale_r(n) ** 2
    if j == 2:
        return sign / (scale_r(n) * scale_s(n))
    if j == 3:
        return sign * scale_s(n) ** 2
    return sign / (scale_r(n + 1) * scale_s(n))


def _half(value: int, what: str) -> int:
    if value % 2:
        raise ArithmeticError(f"parity violation: {what} = {value} is odd")
    return value // 2


def _exact_quotient(num: Poly, den: Poly) -> Poly:
    quotient, remainder = divmod(num, den)
    if not remainder.is_zero:
        raise ArithmeticError(f"expected exact division, got remainder {remainder}")
    return quotient


@lru_cache(maxsize=None)
def factor_a(n: int) -> Poly:
    """Monic factor of the first quotient of block n:
    (T^((3*l_n + l_{n-1} + 3)/2) + T^((l_n + l_{n-1} + 1)/2) - 2) / (T - 1)."""
    if n < 1:
        raise ValueError("factor_a is defined for n >= 1")
    ln, lp = stage_length(n), stage_length(n - 1)
    hi = _half(3 * ln + lp + 3, "3*l_n + l_{n-1} + 3")
    lo = _half(ln + lp + 1, "l_n + l_{n-1} + 1")
    num = Poly.monomial(hi) + Poly.monomial(lo) - Poly.constant(2)
    return _exact_quotient(num, _T_MINUS_1)


@lru_cache(maxsize=None)
def factor_b(n: int) -> Poly:
    """Monic factor of the third quotient of block n:
    (T^((l_n + l_{n-1} + 3)/2) - 1) / (T - 1)."""
    if n < 1:
        raise ValueError("factor_b is defined for n >= 1")
    ln, lp = stage_length(n), stage_length(n - 1)
    power = _half(ln + lp + 3, "l_n + l_{n-1} + 3")
    return _exact_quotient(Poly.monomial(power) - ONE, _T_MINUS_1)


@lru_cache(maxsize=None)
def predicted_denominator(rank: int) -> Poly:
    """Monic continuant denominator at a rank of shape 4n or 4n+2 (n >= 1).

    rank 4n:    T^((l_n + l_{n-1} + 3)/2) * (T^(l_n + 1) - 1)
    rank 4n+2:  T^(3*l_n + l_{n-1} + 4) - 1
    """
    if rank < 4 or rank % 4 not in (0, 2):
        raise ValueError("predicted denominators exist at ranks 4n and 4n+2, n >= 1")
    if rank % 4 == 0:
        n = rank // 4
        ln, lp = stage_length(n), stage_length(n - 1)
        shift = _half(ln + lp + 3, "l_n + l_{n-1} + 3")
        return Poly.monomial(shift) * (Poly.monomial(ln + 1) - ONE)
    n = (rank - 2) // 4
    ln, lp = stage_length(n), stage_length(n - 1)
    return Poly.monomial(3 * ln + lp + 4) - ONE


@dataclass(frozen=True)
class QuotientBlock:
    """Predicted quotients 4n+1..4n+4 with their leading coefficients."""

    n: int
    quotients: tuple[Poly, Poly, Poly, Poly]
    leading_coeffs: tuple[Fraction, Fraction, Fraction, Fraction]


@lru_cache(maxsize=None)
def quotient_block(n: int) -> QuotientBlock:
    """Assemble block n (n >= 1) from the scaling sequences and monic factors."""
    if n < 1:
        raise ValueError("quotient blocks are defined for n >= 1")
    lams = tuple(predicted_leading_coeff(4 * n + j) for j in (1, 2, 3, 4))
    quotients = (
        factor_a(n) * lams[0],
        _T_MINUS_1 * lams[1],
        factor_b(n) * lams[2],
        _T_MINUS_1 * lams[3],
    )
    return QuotientBlock(n, quotients, lams)


def predicted_quotient(i: int) -> Poly:
    """The i-th partial quotient as the closed form predicts it, i >= 1."""
    if i < 1:
        raise ValueError("quotient indices start at 1")
    if i <= 4:
        return _INITIAL_QUOTIENTS[i - 1]
    return quotient_block((i - 1) // 4).quotients[(i - 1) % 4]


# -- identity checks -----------------------------------------------------

IDENTITY_NAMES = (
    "denominator-sum",
    "denominator-gap",
    "cross-product",
    "mu-gap",
    "mu-sum",
    "r-recurrence",
    "l-link",
)


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one identity check; ``residuals`` are exact zero on success."""

    name: str
    n: int
    ok: bool
    residuals: tuple

    def describe(self) -> str:
        if self.ok:
            return f"OK {self.name} n={self.n}"
        parts = ", ".join(str(r) for r in self.residuals if r)
        return f"FAIL {self.name} n={self.n}: residual={parts}"


def _need_certified(e: CFExpansion | None, rank: int, name: str) -> CFExpansion:
    if e is None:
        raise ValueError(f"identity {name!r} needs an expansion (certified >= {rank})")
    if e.certified < rank:
        raise ValueError(
            f"identity {name!r} needs certified >= {rank}, expansion has {e.certified}"
        )
    return e


def check_identity(name: str, n: int, expansion: CFExpansion | None = None) -> IdentityCheck:
    """Check one algebraic identity at index n, returning residual witnesses.

    Polynomial identities (valid ranges in parentheses):

    - ``denominator-sum`` (n >= 1): D(4n) + D(4n+4) = D(4n+2) * ((T-1)*factor_b(n) + 1)
      for D = predicted_denominator.
    - ``denominator-gap`` (n >= 2): D(4n+2) - D(4n-2) = D(4n) * ((T-1)*factor_a(n) + 2).
    - ``cross-product`` (n >= 1, needs expansion certified to 4n+4): with monic
      numerators N(k) = x*_k taken from the expansion,
      N(4n)*D(4n+2) - N(4n+2)*D(4n) = D(4n+4)*N(4n+2) - N(4n+4)*D(4n+2)
      = (-1)^n * (T-1).

    Scalar identities on mu_k (product of the first k leading coefficients):

    - ``mu-gap`` (n >= 2, certified 4n+2): 1/mu_{4n+2} - 1/mu_{4n-2} = 2/mu_{4n}.
    - ``mu-sum`` (n >= 1, certified 4n+4): 1/mu_{4n+2} = 1/mu_{4n} + 1/mu_{4n+4}.

    Scaling-sequence identities:

    - ``r-recurrence`` (n >= 2): scale_r(n+1) = 2*scale_r(n) + scale_r(n-1).
    - ``l-link`` (n >= 2): combined_length satisfies the same recurrence and
      (25/4)*scale_r(n) = combined_length(n).
    """
    if name not in IDENTITY_NAMES:
        raise ValueError(f"unknown identity {name!r}; choose from {IDENTITY_NAMES}")

    if name == "denominator-sum":
        if n < 1:
            raise ValueError("denominator-sum needs n >= 1")
        lhs = predicted_denominator(4 * n) + predicted_denominator(4 * n + 4)
        rhs = predicted_denominator(4 * n + 2) * (_T_MINUS_1 * factor_b(n) + ONE)
        residuals: tuple = (lhs - rhs,)
    elif name == "denominator-gap":
        if n < 2:
            raise ValueError("denominator-gap needs n >= 2")
        lhs = predicted_denominator(4 * n + 2) - predicted_denominator(4 * n - 2)
        rhs = predicted_denominator(4 * n) * (_T_MINUS_1 * factor_a(n) + Poly.constant(2))
        residuals = (lhs - rhs,)
    elif name == "cross-product":
        if n < 1:
            raise ValueError("cross-product needs n >= 1")
        e = _need_certified(expansion, 4 * n + 4, name)
        num_lo = convergent(e, 4 * n).x_star
        num_mid = convergent(e, 4 * n + 2).x_star
        num_hi = convergent(e, 4 * n + 4).x_star
        den_lo = predicted_denominator(4 * n)
        den_mid = predicted_denominator(4 * n + 2)
        den_hi = predicted_denominator(4 * n + 4)
        target = _T_MINUS_1 * ((-1) ** n)
        residuals = (
            num_lo * den_mid - num_mid * den_lo - target,
            den_hi * num_mid - num_hi * den_mid - target,
        )
    elif name == "mu-gap":
        if n < 2:
            raise ValueError("mu-gap needs n >= 2")
        e = _need_certified(expansion, 4 * n + 2, name)
        residuals = (
            1 / e.mu_at(4 * n + 2) - 1 / e.mu_at(4 * n - 2) - 2 / e.mu_at(4 * n),
        )
    elif name == "mu-sum":
        if n < 1:
            raise ValueError("mu-sum needs n >= 1")
        e = _need_certified(expansion, 4 * n + 4, name)
        residuals = (
            1 / e.mu_at(4 * n) + 1 / e.mu_at(4 * n + 4) - 1 / e.mu_at(4 * n + 2),
        )
    elif name == "r-recurrence":
        if n < 2:
            raise ValueError("r-recurrence needs n >= 2")
        residuals = (scale_r(n + 1) - 2 * scale_r(n) - scale_r(n - 1),)
    else:  # l-link
        if n < 2:
            raise ValueError("l-link needs n >= 2")
        residuals = (
            Fraction(combined_length(n + 1) - 2 * combined_length(n) - combined_length(n - 1)),
            Fraction(25, 4) * scale_r(n) - combined_length(n),
        )

    ok = all(not r for r in residuals)
    return IdentityCheck(name, n, ok, residuals)
