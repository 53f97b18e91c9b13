from fractions import Fraction

import pytest

import palsum


def test_digits_and_enumeration():
    assert palsum.is_palindrome(121, 10)
    assert not palsum.is_palindrome(10, 10)
    assert palsum.to_digits(5, 2) == [1, 0, 1]
    assert palsum.enumerate_palindromes(2, 5) == [17, 21, 27, 31]
    assert palsum.count_palindromes(10, 3) == 90
    assert palsum.unrank_palindrome(10, 3, 89) == 999
    assert palsum.rank_palindrome(999, 10) == 89


def test_big_integers_cross_the_boundary():
    n = palsum.unrank_palindrome(1 << 20, 5, 0)
    assert n == (1 << 80) + 1
    assert palsum.is_palindrome(n, 1 << 20)


def test_exact_sums_are_fractions():
    assert palsum.layer_sum_exact(2, 3) == Fraction(12, 35)
    assert palsum.partial_sum_exact(2, 3) == Fraction(176, 105)
    assert palsum.harmonic_x(10) == Fraction(7129, 2520)
    assert palsum.tail_geometric(10, 2) == Fraction(2, 90)


def test_bounds():
    lower, upper = palsum.series_bounds(7)
    assert lower.lower_decimal(7) == "3.1289733"
    assert upper.upper_decimal(7) == "3.1450277"
    assert lower.hi < upper.lo
    lo, hi = palsum.simple_bounds(2)
    assert lo.contains(Fraction(11, 6))
    assert hi.contains(Fraction(41, 15))
    assert palsum.layer_sum(2, 3).contains(Fraction(12, 35))


def test_analysis():
    assert palsum.verify_monotone_chain(16)
    assert palsum.logconcavity_scan(3, 10)
    assert palsum.table_row(3)["M"].nearest_decimal(8) == "0.18128669"
    assert palsum.kernel_carry_check(50)["holds"]
    assert not palsum.tail_inequality_check(10)["holds"]
    assert palsum.three_digit_shift_check(50)
    assert palsum.sum_integral_sandwich_check("reciprocal", 1, 9)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        palsum.count_palindromes(1, 3)
    with pytest.raises(IndexError):
        palsum.unrank_palindrome(10, 3, 90)
    with pytest.raises(palsum.TermBudgetExceeded):
        palsum.layer_sum_exact(10, 7, term_budget=1000)
    with pytest.raises(palsum.PrecisionUnderflow):
        palsum.series_bounds(3, precision_bits=64)[0].lower_decimal(25)
    with pytest.raises(ValueError):
        palsum.sum_integral_sandwich_check("cosine", 1, 2)
