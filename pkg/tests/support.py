"""Test support: deterministic input generators and tiny reference oracles.

The reference implementations here are deliberately independent of the
package internals (literal recursions, brute-force loops) so that tests
compare two genuinely different routes to the same values.
"""

from __future__ import annotations

import random
from fractions import Fraction

from laurentcf import Poly, expand


def reference_stage(n: int) -> list[int]:
    """Stage word by the literal recursion, no memoization, no sharing."""
    if n == 0:
        return []
    if n == 1:
        return [1]
    outer, inner = reference_stage(n - 1), reference_stage(n - 2)
    return outer + [2] + inner + [2] + outer


def reference_lengths(upto: int) -> list[int]:
    out = [0, 1]
    while len(out) <= upto:
        out.append(2 * out[-1] + out[-2] + 2)
    return out[: upto + 1]


def random_rat(rng: random.Random, span: int = 4) -> Fraction:
    return Fraction(rng.randrange(-span, span + 1))


def random_proper_fraction(rng: random.Random, min_den_deg: int = 2, max_den_deg: int = 8):
    """A random (num, den) with deg num < deg den and a nonzero numerator.

    Numerators usually get full degree d-1 so the expansion has around d
    quotients; now and then a short numerator exercises the large-first-quotient
    path.
    """
    d = rng.randrange(min_den_deg, max_den_deg + 1)
    lead = Fraction(rng.choice((1, 2, 3, -1, -2)))
    den = Poly([random_rat(rng) for _ in range(d)] + [lead])
    if rng.random() < 0.25:
        while True:
            num = Poly([random_rat(rng) for _ in range(rng.randrange(1, d + 1))])
            if not num.is_zero:
                return num, den
    num_lead = Fraction(rng.choice((1, 2, -1, -2)))
    num = Poly([random_rat(rng) for _ in range(d - 1)] + [num_lead])
    return num, den


def exact_expansions(count: int, seed: int = 20240901, **kwargs):
    """Deterministic batch of exactly-expanded random rational functions."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        num, den = random_proper_fraction(rng, **kwargs)
        out.append((num, den, expand(num, den)))
    return out


def lift_to_sympy(poly: Poly, symbol):
    """Re-express a Poly in sympy over QQ (for oracle comparisons)."""
    import sympy

    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(poly.coeffs)]
    return sympy.Poly.from_list(coeffs or [0], symbol, domain="QQ")
