"""Polynomial, truncated-series, and factored-rational arithmetic."""

import random

import pytest

from partition_gf.errors import (
    InvalidExponent,
    NonUnitDivisor,
    OrderTooLarge,
)
from partition_gf.qseries import (
    FactoredRational,
    IntPolynomial,
    TruncatedSeries,
    expand_factored,
    gauss_binomial,
    gauss_binomial_pascal,
    geometric_inverse,
    pochhammer_infinite,
    pochhammer_q,
    pochhammer_shifted,
    poly_divmod,
    poly_mul,
    series_div_unit,
    series_mul,
)


def P(*coeffs):
    return IntPolynomial(coeffs)


class TestIntPolynomial:
    def test_canonical_zero(self):
        assert IntPolynomial([0, 0, 0]).coeffs == ()
        assert IntPolynomial([]).coeffs == ()
        assert IntPolynomial([0]).degree == -1
        assert IntPolynomial([0, 0]) == IntPolynomial([])

    def test_trailing_zeros_trimmed(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(1, 2, 0, 0).degree == 1

    def test_getitem_beyond_degree_is_zero(self):
        assert P(1, 2)[5] == 0
        assert P(1, 2)[1] == 2

    def test_mul_difference_of_squares(self):
        assert P(1, 1) * P(1, -1) == P(1, 0, -1)

    def test_mul_zero_absorbs(self):
        assert IntPolynomial() * P(1, 0, 0, -1) == IntPolynomial()

    def test_mul_hand_expansion(self):
        # (1-q)(1-q^2) = 1 - q - q^2 + q^3
        assert P(1, -1) * P(1, 0, -1) == P(1, -1, -1, 1)

    def test_mul_degree_adds(self):
        a, b = P(2, 0, 3), P(-1, 4, 0, 0, 5)
        assert (a * b).degree == a.degree + b.degree

    def test_mul_commutes(self):
        rng = random.Random(7)
        for _ in range(25):
            a = IntPolynomial(rng.randrange(-4, 5) for _ in range(rng.randrange(6)))
            b = IntPolynomial(rng.randrange(-4, 5) for _ in range(rng.randrange(6)))
            assert poly_mul(a, b) == poly_mul(b, a)

    def test_divmod_roundtrip(self):
        rng = random.Random(11)
        for _ in range(40):
            a = IntPolynomial(rng.randrange(-5, 6) for _ in range(rng.randrange(9)))
            b = IntPolynomial([rng.randrange(-5, 6) for _ in range(rng.randrange(4))] + [1])
            quot, rem = poly_divmod(a, b)
            assert quot * b + rem == a
            assert rem.degree < b.degree

    def test_divmod_needs_unit_leading(self):
        from partition_gf.errors import ExactDivisionError

        with pytest.raises(ExactDivisionError):
            poly_divmod(P(1, 0, 4), P(1, 2))

    def test_shift_and_monomial(self):
        assert P(1, -1).shift(3) == P(0, 0, 0, 1, -1)
        assert IntPolynomial.monomial(4) == P(0, 0, 0, 0, 1)

    def test_evaluate(self):
        assert P(1, -2, 1).evaluate(3) == 4


class TestTruncatedSeries:
    def test_equality_is_strict_about_order(self):
        a = TruncatedSeries([1, 2, 3])
        b = TruncatedSeries([1, 2, 3, 0])
        assert a != b
        assert a.matches(b)
        assert a.matches(b, through=2)

    def test_matches_beyond_order_raises(self):
        a = TruncatedSeries([1, 2, 3])
        with pytest.raises(OrderTooLarge):
            a.matches(TruncatedSeries([1, 2, 3, 4]), through=3)

    def test_getitem_beyond_order_raises(self):
        s = TruncatedSeries([1, 2])
        assert s[1] == 2
        with pytest.raises(OrderTooLarge):
            s[2]

    def test_truncate(self):
        s = TruncatedSeries([1, 2, 3, 4])
        assert s.truncate(1) == TruncatedSeries([1, 2])
        with pytest.raises(OrderTooLarge):
            s.truncate(9)

    def test_mul_geometric_prefix_square(self):
        s = TruncatedSeries([1, 1, 1])
        assert series_mul(s, s, 2) == TruncatedSeries([1, 2, 3])

    def test_mul_identity(self):
        s = TruncatedSeries([3, -1, 4, 1])
        assert series_mul(s, TruncatedSeries.one(3)) == s

    def test_mul_order_too_large(self):
        with pytest.raises(OrderTooLarge):
            series_mul(TruncatedSeries([1, 1]), TruncatedSeries([1, 1]), 5)

    def test_mul_telescopes_against_inverse(self):
        one_minus_q = TruncatedSeries.from_polynomial(P(1, -1), 5)
        assert series_mul(one_minus_q, geometric_inverse(1, 5)) == TruncatedSeries.one(5)


class TestSeriesDivision:
    def test_by_one_minus_q_matches_geometric(self):
        a = TruncatedSeries.one(4)
        b = TruncatedSeries.from_polynomial(P(1, -1), 4)
        assert series_div_unit(a, b) == geometric_inverse(1, 4)

    def test_self_division_is_one(self):
        b = TruncatedSeries([1, 5, -2, 7, 0, 3])
        assert series_div_unit(b, b) == TruncatedSeries.one(5)

    def test_difference_two_denominator(self):
        # q^4 / ((1-q)^3 (1+q)^2) expanded through q^8
        denominator = P(1, -1) * P(1, -1) * P(1, -1) * P(1, 1) * P(1, 1)
        a = TruncatedSeries.from_polynomial(IntPolynomial.monomial(4), 8)
        b = TruncatedSeries.from_polynomial(denominator, 8)
        assert series_div_unit(a, b).coeffs == (0, 0, 0, 0, 1, 1, 3, 3, 6)

    def test_non_unit_divisor_rejected(self):
        with pytest.raises(NonUnitDivisor):
            series_div_unit(TruncatedSeries.one(3), TruncatedSeries([2, 1, 0, 0]))

    def test_div_mul_roundtrip(self):
        rng = random.Random(23)
        for _ in range(30):
            order = rng.randrange(3, 12)
            a = TruncatedSeries([rng.randrange(-6, 7) for _ in range(order + 1)])
            b_coeffs = [rng.choice([1, -1])] + [rng.randrange(-3, 4) for _ in range(order)]
            b = TruncatedSeries(b_coeffs)
            assert series_mul(series_div_unit(a, b), b) == a


class TestGeometricInverse:
    def test_m_one(self):
        assert geometric_inverse(1, 3) == TruncatedSeries([1, 1, 1, 1])

    def test_m_three(self):
        assert geometric_inverse(3, 7).coeffs == (1, 0, 0, 1, 0, 0, 1, 0)

    def test_constant_prefix(self):
        assert geometric_inverse(2, 0) == TruncatedSeries([1])

    def test_rejects_nonpositive(self):
        with pytest.raises(InvalidExponent):
            geometric_inverse(0, 5)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer_q(0) == P(1)

    def test_two_factors(self):
        assert pochhammer_q(2) == P(1, -1, -1, 1)

    @pytest.mark.parametrize("m", range(8))
    def test_degree_is_triangular(self, m):
        if m == 0:
            assert pochhammer_q(m).degree == 0
        else:
            assert pochhammer_q(m).degree == m * (m + 1) // 2

    def test_shifted_single_factor(self):
        assert pochhammer_shifted(2, 1) == P(1, 0, -1)

    @pytest.mark.parametrize("m", range(6))
    def test_shifted_specializes_at_one(self, m):
        assert pochhammer_shifted(1, m) == pochhammer_q(m)

    def test_shifted_hand_expansion(self):
        # (1-q^3)(1-q^4) = 1 - q^3 - q^4 + q^7
        assert pochhammer_shifted(3, 2) == P(1, 0, 0, -1, -1, 0, 0, 1)

    def test_infinite_beyond_order_is_one(self):
        assert pochhammer_infinite(9, 5) == TruncatedSeries.one(5)

    def test_infinite_pentagonal_prefix(self):
        assert pochhammer_infinite(1, 5).coeffs == (1, -1, -1, 0, 0, 1)

    def test_infinite_shifted(self):
        assert pochhammer_infinite(2, 3).coeffs == (1, 0, -1, -1)

    def test_infinite_rejects_nonpositive(self):
        with pytest.raises(InvalidExponent):
            pochhammer_infinite(0, 4)


class TestGaussBinomial:
    def test_smallest_nontrivial(self):
        assert gauss_binomial(2, 1) == P(1, 1)

    def test_four_choose_two(self):
        assert gauss_binomial(4, 2) == P(1, 1, 2, 1, 1)

    def test_out_of_range_is_zero(self):
        assert gauss_binomial(5, 7) == IntPolynomial()
        assert gauss_binomial(5, -1) == IntPolynomial()

    @pytest.mark.parametrize("top", range(9))
    def test_symmetry(self, top):
        for bottom in range(top + 1):
            assert gauss_binomial(top, bottom) == gauss_binomial(top, top - bottom)

    @pytest.mark.parametrize("top", range(9))
    def test_nonnegative_and_sum_is_binomial(self, top):
        import math

        for bottom in range(top + 1):
            poly = gauss_binomial(top, bottom)
            assert all(c >= 0 for c in poly.coeffs)
            assert poly.evaluate(1) == math.comb(top, bottom)
            assert poly.degree == bottom * (top - bottom)

    @pytest.mark.parametrize("top", range(9))
    def test_matches_pascal_recurrence(self, top):
        for bottom in range(-1, top + 2):
            assert gauss_binomial(top, bottom) == gauss_binomial_pascal(top, bottom)


class TestFactoredRational:
    def test_expand_plain_geometric(self):
        fr = FactoredRational(P(1), [(1, 1)])
        assert fr.expand(3) == TruncatedSeries([1, 1, 1, 1])

    def test_expand_difference_two_display(self):
        # q^4 over (1-q)(1-q^2)^2, the normalized shape of (1-q)^3(1+q)^2
        fr = FactoredRational(IntPolynomial.monomial(4), [(1, 1), (2, 2)])
        assert fr.expand(8).coeffs == (0, 0, 0, 0, 1, 1, 3, 3, 6)

    def test_expand_difference_three_display(self):
        from partition_gf.counting import fixed_diff_table

        fr = FactoredRational(P(0, 0, 0, 0, 0, 1, 1, 1, -1), [(2, 2), (3, 2)])
        assert list(fr.expand(12).coeffs) == fixed_diff_table(3, 12)

    def test_denominators_merge_and_sort(self):
        fr = FactoredRational(P(1), [(3, 1), (1, 2), (3, 1)])
        assert fr.denominator == ((1, 2), (3, 2))

    def test_zero_normalizes(self):
        fr = FactoredRational(IntPolynomial(), [(2, 1)])
        assert fr.denominator == ()
        assert fr.expand(5) == TruncatedSeries.zero(5)

    def test_multiplicative(self):
        a = FactoredRational(P(1, 1), [(1, 1), (3, 1)])
        b = FactoredRational(P(0, 1, -1), [(2, 2)])
        left = (a * b).expand(20)
        right = series_mul(a.expand(20), b.expand(20))
        assert left == right

    def test_addition(self):
        a = FactoredRational(P(1), [(1, 1)])
        b = FactoredRational(P(0, 1), [(2, 1)])
        total = a + b
        assert total.expand(10) == a.expand(10) + b.expand(10)

    def test_reduce_preserves_expansion(self):
        fr = FactoredRational(P(0, 1, -1).shift(3), [(1, 2), (2, 1)])  # q^4(1-q)/...
        reduced = fr.reduce()
        assert reduced.expand(15) == fr.expand(15)
        assert reduced.denominator == ((1, 1), (2, 1))

    def test_expand_factored_function(self):
        fr = FactoredRational(P(1), [(2, 1)])
        assert expand_factored(fr, 5) == geometric_inverse(2, 5)

    def test_invalid_denominator(self):
        with pytest.raises(InvalidExponent):
            FactoredRational(P(1), [(0, 1)])
