import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laurentcf import (
    Poly,
    PrecisionCapExceeded,
    RationalFunctionSource,
    SequenceSource,
    T,
    TruncatedSeries,
    certify_by_doubling,
    continuant,
    convergent,
    delta,
    expand,
    expansion_rows,
    measure_estimate,
    poly_gcd,
    series_source,
)
from laurentcf.polynomial import ONE, ZERO
from support import exact_expansions, random_proper_fraction

# the four opening quotients and the next four, frozen as canonical text
OPENING = [
    "1/1*T^1 - 2/1*T^0",
    "1/2*T^1 + 1/4*T^0",
    "8/5*T^1 + 76/25*T^0",
    "-125/48*T^1 + 25/24*T^0",
]
BLOCK1 = [
    "144/625*T^2 + 144/625*T^1 + 288/625*T^0",
    "625/528*T^1 - 625/528*T^0",
    "1936/625*T^1 + 1936/625*T^0",
    "625/1408*T^1 - 625/1408*T^0",
]

RANK4_NUM = Poly([-1, 1, 2, 1])                  # T^3 + 2T^2 + T - 1
RANK4_DEN = Poly.monomial(4) - T * T             # T^4 - T^2
RANK6_NUM = Poly([2, 1, 2, 1, 2, 2, 1])          # T^6 + 2T^5 + ... + T + 2
RANK6_DEN = Poly.monomial(7) - ONE               # T^7 - 1


class TestExactRationalInputs:
    def test_rank4_convergent_expands_to_opening_quotients(self):
        e = expand(RANK4_NUM, RANK4_DEN)
        assert e.terminated
        assert [str(a) for a in e.partial_quotients] == OPENING
        assert e.certified == 4

    def test_rank6_convergent_adds_two_quotients(self):
        e = expand(RANK6_NUM, RANK6_DEN)
        assert e.terminated
        assert [str(a) for a in e.partial_quotients] == OPENING + BLOCK1[:2]

    def test_single_quotient(self):
        e = expand(ONE, T - Poly.constant(2), max_terms=10)
        assert e.terminated
        assert e.partial_quotients == (T - Poly.constant(2),)

    def test_zero_numerator(self):
        e = expand(ZERO, T)
        assert e.terminated and e.length == 0

    def test_reconstruction(self):
        for num, den, e in exact_expansions(25):
            k = e.length
            assert e.terminated
            assert num * e.y[k] == den * e.x[k]


class TestPreconditions:
    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            expand(ONE, ZERO)

    def test_polynomial_part_must_be_zero(self):
        with pytest.raises(ValueError):
            expand(T * T, T)
        with pytest.raises(ValueError):
            expand(T, T)

    def test_bad_limits(self):
        with pytest.raises(ValueError):
            expand(ONE, T, max_terms=0)
        with pytest.raises(ValueError):
            expand(ONE, T, precision=0)


class TestTruncatedWordSeries:
    def test_opening_quotients_at_precision_30(self, theta_small):
        assert [str(theta_small.quotient(i)) for i in range(1, 5)] == OPENING

    def test_block1_head_at_precision_30(self, theta_small):
        assert str(theta_small.quotient(5)) == BLOCK1[0]
        assert str(theta_small.quotient(6)) == BLOCK1[1]
        assert theta_small.certified == 6

    def test_mu_milestones(self, theta_deep):
        assert theta_deep.mu_at(4) == Fraction(-25, 12)
        assert theta_deep.mu_at(6) == Fraction(-25, 44)
        assert theta_deep.mu_at(8) == Fraction(-25, 32)
        assert theta_deep.mu_at(10) == Fraction(-25, 108)

    def test_all_quotients_non_constant(self, theta_deep):
        assert all(a.degree >= 1 for a in theta_deep.partial_quotients)

    def test_quotient_index_bounds(self, theta_small):
        with pytest.raises(IndexError):
            theta_small.quotient(0)
        with pytest.raises(IndexError):
            theta_small.quotient(7)


class TestContinuant:
    def test_empty(self):
        assert continuant([]) == ONE

    def test_two_terms(self):
        assert continuant([T, T]) == T * T + ONE

    def test_three_terms(self):
        # <x, y, z> = xyz + x + z, so <T, T, T> = T^3 + 2T
        assert continuant([T, T, T]) == Poly([0, 2, 0, 1])

    def test_matches_stored_continuants(self, theta_small):
        qs = theta_small.partial_quotients
        for n in range(1, len(qs) + 1):
            assert continuant(qs[:n]) == theta_small.y[n]
            assert continuant(qs[1:n]) == theta_small.x[n]


class TestDelta:
    def test_adjacent_is_unit(self, theta_deep):
        for n in range(2, theta_deep.length + 1):
            assert delta(theta_deep, n - 1, n) == Poly.constant((-1) ** (n - 1))

    def test_skip_one(self, theta_small):
        assert delta(theta_small, 1, 3) == -theta_small.quotient(3)

    def test_rank4_to_rank6(self, theta_deep):
        # x_6 y_4 - x_4 y_6 = mu_6 mu_4 (T - 1), and that product is a_6
        want = (T - ONE) * (theta_deep.mu_at(6) * theta_deep.mu_at(4))
        assert delta(theta_deep, 4, 6) == want
        assert delta(theta_deep, 4, 6) == theta_deep.quotient(6)

    def test_continuant_equivalence_exhaustive_small(self, theta_deep):
        qs = theta_deep.partial_quotients
        for m in range(1, 10):
            for n in range(m + 1, 11):
                want = continuant(qs[m + 1 : n]) * ((-1) ** m)
                assert delta(theta_deep, m, n) == want

    def test_continuant_equivalence_sampled_large(self, theta_deep):
        rng = random.Random(11)
        qs = theta_deep.partial_quotients
        for _ in range(12):
            m = rng.randrange(1, theta_deep.length)
            n = rng.randrange(m + 1, theta_deep.length + 1)
            want = continuant(qs[m + 1 : n]) * ((-1) ** m)
            assert delta(theta_deep, m, n) == want

    def test_index_validation(self, theta_small):
        for m, n in ((0, 3), (3, 3), (4, 2), (1, 7)):
            with pytest.raises(IndexError):
                delta(theta_small, m, n)


class TestConvergent:
    def test_rank4(self, theta_deep):
        c = convergent(theta_deep, 4)
        assert c.y_star == RANK4_DEN
        assert c.x_star == RANK4_NUM
        assert c.x == c.x_star * theta_deep.mu_at(4)
        assert c.y == c.y_star * theta_deep.mu_at(4)

    def test_rank6(self, theta_deep):
        c = convergent(theta_deep, 6)
        assert c.y_star == RANK6_DEN
        assert c.x_star == RANK6_NUM

    def test_beyond_certified(self, theta_small):
        with pytest.raises(ValueError):
            convergent(theta_small, 7)


class TestInvariants:
    def test_determinant_identity(self, theta_deep):
        e = theta_deep
        for n in range(1, e.length + 1):
            assert e.x[n] * e.y[n - 1] - e.x[n - 1] * e.y[n] == Poly.constant((-1) ** (n - 1))

    def test_coprimality_small(self, theta_deep):
        for n in range(1, 11):
            assert poly_gcd(theta_deep.x[n], theta_deep.y[n]) == ONE

    def test_mu_is_leading_coeff_product(self, theta_deep):
        e = theta_deep
        acc = Fraction(1)
        for n in range(1, e.length + 1):
            acc *= e.quotient(n).leading_coeff()
            assert e.mu_at(n) == acc
            assert e.y[n].leading_coeff() == acc

    def test_approximation_quality(self):
        series = TruncatedSeries.from_source(series_source(), 64)
        num, den = series.to_rational()
        e = expand(num, den, precision=64, max_terms=10)
        for k in range(1, e.length):
            err = num * e.y[k] - den * e.x[k]
            # the error polynomial is T^N shrunk by the next continuant
            assert err.degree == den.degree - e.y[k + 1].degree
            assert err.degree < den.degree - e.y[k].degree + e.y[k - 1].degree

    @given(seed=st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=60)
    def test_random_exact_expansions(self, seed):
        rng = random.Random(seed)
        num, den = random_proper_fraction(rng)
        e = expand(num, den)
        assert e.terminated
        for n in range(1, e.length + 1):
            assert e.x[n] * e.y[n - 1] - e.x[n - 1] * e.y[n] == Poly.constant((-1) ** (n - 1))
            assert poly_gcd(e.x[n], e.y[n]) == ONE
            assert e.y[n].leading_coeff() == e.mu_at(n)
            assert e.quotient(n).degree >= 1
        k = e.length
        assert num * e.y[k] == den * e.x[k]


class TestCertification:
    def test_certified_at_known_precision(self):
        s = TruncatedSeries.from_source(series_source(), 30)
        e = expand(*s.to_rational(), precision=30, max_terms=64)
        # 2*deg y_8 = 18 <= 29 but 2*deg y_9 = 32 > 29
        assert e.certified == 8

    def test_prefix_stable_under_doubling(self):
        src = series_source()
        previous = None
        for n in (32, 64, 128, 256):
            s = TruncatedSeries.from_source(src, n)
            e = expand(*s.to_rational(), precision=n, max_terms=40)
            if previous is not None:
                k = min(previous.certified, e.certified)
                assert previous.partial_quotients[:k] == e.partial_quotients[:k]
            previous = e

    def test_certify_by_doubling_matches_blocks(self, theta_deep):
        e = certify_by_doubling(series_source(), 8, start_precision=16)
        assert e.certified >= 8
        assert e.partial_quotients[:8] == theta_deep.partial_quotients[:8]
        assert [str(a) for a in e.partial_quotients[:4]] == OPENING
        assert [str(a) for a in e.partial_quotients[4:8]] == BLOCK1

    def test_rational_source_hits_the_cap(self):
        with pytest.raises(PrecisionCapExceeded) as info:
            certify_by_doubling(SequenceSource([1, 2, 1]), 10, start_precision=4,
                                precision_cap=256)
        assert info.value.cap == 256
        assert "rational" in str(info.value)

    def test_rational_source_within_its_length_terminates(self):
        e = certify_by_doubling(SequenceSource([1]), 1, start_precision=4)
        assert e.terminated
        assert e.partial_quotients == (T,)

    def test_validation(self):
        with pytest.raises(ValueError):
            certify_by_doubling(series_source(), 0)
        with pytest.raises(ValueError):
            certify_by_doubling(series_source(), 1, start_precision=0)
        with pytest.raises(ValueError):
            certify_by_doubling(series_source(), 1, start_precision=64, precision_cap=32)

class TestMeasure:
    def test_first_estimate_is_three(self, theta_deep):
        rows = dict(measure_estimate(theta_deep))
        assert rows[1] == 3

    def test_deep_estimate(self, theta_deep):
        rows = dict(measure_estimate(theta_deep))
        assert rows[24] == Fraction(2) + Fraction(287, 289)

    def test_bounded_quotients_drift_to_two(self):
        # [0; T, T, T, ...]: every quotient has degree 1, so the estimate
        # decays as 2 + 1/n.  Build a deep convergent of it, expand its series.
        y_prev, y_cur = ONE, T
        for _ in range(19):
            y_prev, y_cur = y_cur, T * y_cur + y_prev
        source = RationalFunctionSource(y_prev, y_cur)
        series = TruncatedSeries.from_source(source, 20)
        e = expand(*series.to_rational(), precision=20, max_terms=40)
        assert e.certified >= 9
        assert all(a == T for a in e.partial_quotients[: e.certified])
        for n, value in measure_estimate(e):
            assert value == Fraction(2) + Fraction(1, n)

    def test_needs_two_certified(self):
        e = expand(ONE, T - ONE)
        with pytest.raises(ValueError):
            measure_estimate(e)


class TestRows:
    def test_json_rows(self, theta_small):
        rows = expansion_rows(theta_small)
        assert [r["n"] for r in rows] == [1, 2, 3, 4, 5, 6]
        assert rows[4] == {
            "n": 5,
            "a": BLOCK1[0],
            "deg": 2,
            "lambda": "144/625",
            "mu": "-12/25",
            "certified": True,
        }
