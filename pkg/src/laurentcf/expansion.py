"""Continued-fraction expansion of Laurent series, with certified prefixes.

For a series value f with zero polynomial part, f = [0; a_1, a_2, ...] where
every partial quotient a_n is a non-constant polynomial.  Expanding a
truncation f_N only determines a prefix of the true expansion; the engine
keeps every quotient the Euclidean algorithm produces but certifies exactly
those that the truncation pins down:

    certified = max k  such that  2 * deg y_k <= N - 1

(y_k are the continuant denominators).  Rationale: x/y in lowest terms is a
convergent of g exactly when |g - x/y| < |y|^-2, so perturbing a series by
less than T^-N can neither disturb nor add a convergent whose denominator
degree stays within N/2; the rule keeps one degree of margin on top.  The
once-popular looser variant deg y_{k-1} + deg y_k <= N - 1 over-certifies
(the word series at N = 64 mis-certifies quotient 13 under it).
`certify_by_doubling` additionally re-expands at doubled precision and
checks the prefix did not move.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .polynomial import ONE, Poly, ZERO
from .series import CoefficientSource, TruncatedSeries

_ONE = Fraction(1)


class PrecisionCapExceeded(RuntimeError):
    """Doubling reached the precision cap before certifying the requested prefix.

    Either the cap is too small, or the source is (or agrees with) a rational
    series: a rational value has a finite continued fraction, so no precision
    certifies more quotients than it has.
    """

    def __init__(self, requested: int, cap: int, target_terms: int):
        super().__init__(
            f"would need precision {requested} > cap {cap} while certifying "
            f"{target_terms} quotients; the series may be rational or the cap too small"
        )
        self.requested = requested
        self.cap = cap
        self.target_terms = target_terms


class CertificationError(RuntimeError):
    """A certified prefix changed under doubling; the certification rule failed."""


class Convergent(NamedTuple):
    x: Poly
    y: Poly
    x_star: Poly
    y_star: Poly


@dataclass(frozen=True)
class CFExpansion:
    """Partial quotients and continuants of one expansion run.

    Index 0 of ``x``/``y``/``mu`` holds the seeds (0, 1, 1); entry n holds
    x_n, y_n, mu_n.  ``partial_quotients[n-1]`` is a_n.  ``certified`` counts
    the leading quotients guaranteed to equal those of the untruncated series;
    quotients beyond it are retained but unreliable.
    """

    partial_quotients: tuple[Poly, ...]
    x: tuple[Poly, ...]
    y: tuple[Poly, ...]
    mu: tuple[Fraction, ...]
    certified: int
    source_precision: int | None
    terminated: bool

    @property
    def length(self) -> int:
        return len(self.partial_quotients)

    def quotient(self, n: int) -> Poly:
        """a_n (1-based)."""
        if not 1 <= n <= self.length:
            raise IndexError(f"quotient index {n} outside 1..{self.length}")
        return self.partial_quotients[n - 1]

    def numerator(self, n: int) -> Poly:
        """Continuant numerator x_n, 0 <= n <= length."""
        return self.x[n]

    def denominator(self, n: int) -> Poly:
        """Continuant denominator y_n, 0 <= n <= length."""
        return self.y[n]

    def mu_at(self, n: int) -> Fraction:
        """Product of the first n leading coefficients (mu_0 = 1)."""
        return self.mu[n]


def expand(
    num: Poly,
    den: Poly,
    precision: int | None = None,
    max_terms: int = 64,
) -> CFExpansion:
    """Expand num/den = [0; a_1, a_2, ...] by polynomial Euclid.

    ``precision`` is the truncation precision N the pair encodes (den = T^N for
    series truncations); pass None for an exactly known rational function, in
    which case every produced quotient is certified.  Stops after ``max_terms``
    quotients or on a zero remainder (``terminated``: the input was rational).
    """
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    if not num.degree < den.degree:
        raise ValueError("expected deg num < deg den (zero polynomial part)")
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    if precision is not None and precision < 1:
        raise ValueError("precision must be >= 1 (or None for exact input)")

    quotients: list[Poly] = []
    xs: list[Poly] = [ZERO]
    ys: list[Poly] = [ONE]
    mus: list[Fraction] = [_ONE]
    x_back, y_back = ONE, ZERO  # virtual index -1 seeds
    f_prev, f_cur = den, num
    while len(quotients) < max_terms and not f_cur.is_zero:
        a, remainder = divmod(f_prev, f_cur)
        quotients.append(a)
        x_back, xs_new = xs[-1], a * xs[-1] + x_back
        y_back, ys_new = ys[-1], a * ys[-1] + y_back
        xs.append(xs_new)
        ys.append(ys_new)
        mus.append(mus[-1] * a.leading_coeff())
        assert ys_new.leading_coeff() == mus[-1]  # mu_n is the leading coeff of y_n
        f_prev, f_cur = f_cur, remainder
    terminated = f_cur.is_zero

    if precision is None:
        certified = len(quotients)
    else:
        certified = 0
        for k in range(1, len(quotients) + 1):
            if 2 * ys[k].degree <= precision - 1:
                certified = k
            else:
                break

    return CFExpansion(
        partial_quotients=tuple(quotients),
        x=tuple(xs),
        y=tuple(ys),
        mu=tuple(mus),
        certified=certified,
        source_precision=precision,
        terminated=terminated,
    )


def continuant(quotients: Iterable[Poly]) -> Poly:
    """<q_1, ..., q_k> with <> = 1 and K_j = q_j*K_{j-1} + K_{j-2}."""
    prev, cur = ZERO, ONE
    for q in quotients:
        prev, cur = cur, q * cur + prev
    return cur


def delta(e: CFExpansion, m: int, n: int) -> Poly:
    """x_n*y_m - x_m*y_n; equals (-1)^m * <a_{m+2}, ..., a_n>."""
    if not 1 <= m < n <= e.length:
        raise IndexError(f"need 1 <= m < n <= {e.length}, got m={m}, n={n}")
    return e.x[n] * e.y[m] - e.x[m] * e.y[n]


def convergent(e: CFExpansion, n: int) -> Convergent:
    """The n-th convergent with its monic continuants; n must be certified."""
    if not 1 <= n <= e.certified:
        raise ValueError(f"convergent {n} is beyond the certified prefix ({e.certified})")
    x, y = e.x[n], e.y[n]
    return Convergent(x, y, x.monic(), y.monic())


def certify_by_doubling(
    source: CoefficientSource,
    target_terms: int,
    start_precision: int = 64,
    precision_cap: int = 2**20,
) -> CFExpansion:
    """Expand at doubling precisions until ``target_terms`` quotients certify.

    The returned expansion is additionally re-checked at one further doubling
    (the check run may exceed the cap; only certification precisions are
    capped).  Raises :class:`PrecisionCapExceeded` when doubling would pass the
    cap, which is the expected outcome for a rational source asked for more
    quotients than its finite expansion has.
    """
    if target_terms < 1:
        raise ValueError("target_terms must be >= 1")
    if start_precision < 1:
        raise ValueError("start_precision must be >= 1")
    if precision_cap < start_precision:
        raise ValueError("precision_cap must be >= start_precision")

    series = TruncatedSeries.from_source(source, start_precision)
    while True:
        e = expand(*series.to_rational(), precision=series.precision, max_terms=target_terms)
        if e.certified >= target_terms:
            break
        doubled = 2 * series.precision
        if doubled > precision_cap:
            raise PrecisionCapExceeded(doubled, precision_cap, target_terms)
        series = series.extend(doubled)

    check = series.extend(2 * series.precision)
    e2 = expand(*check.to_rational(), precision=check.precision, max_terms=target_terms)
    if e.partial_quotients[:target_terms] != e2.partial_quotients[:target_terms]:
        raise CertificationError(
            f"certified prefix changed between precisions {series.precision} "
            f"and {check.precision}"
        )
    return e


def measure_estimate(e: CFExpansion) -> list[tuple[int, Fraction]]:
    """Irrationality-measure estimates (n, 2 + deg a_{n+1} / deg y_n) for n < certified.

    The running maximum over n is the estimate for the expanded value; degrees
    of partial quotients against continuant degrees govern how well convergents
    approximate, hence the exponent.
    """
    if e.certified < 2:
        raise ValueError("need at least 2 certified quotients to estimate")
    rows: list[tuple[int, Fraction]] = []
    for n in range(1, e.certified):
        dy = e.y[n].degree
        if dy == 0:
            raise ArithmeticError(f"degenerate continuant degree at n={n}")
        rows.append((n, Fraction(2) + Fraction(e.partial_quotients[n].degree, dy)))
    return rows


def expansion_rows(e: CFExpansion) -> list[dict]:
    """JSON-ready rows: one dict per partial quotient."""
    return [
        {
            "n": n,
            "a": str(e.partial_quotients[n - 1]),
            "deg": e.partial_quotients[n - 1].degree,
            "lambda": str(e.partial_quotients[n - 1].leading_coeff()),
            "mu": str(e.mu[n]),
            "certified": n <= e.certified,
        }
        for n in range(1, e.length + 1)
    ]
