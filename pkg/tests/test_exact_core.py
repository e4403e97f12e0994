from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kdiv import LPower, is_prime, linv_abs, lval
from kdiv.errors import NegativeValuation, NotPrime, ZeroInput
from kdiv.exact_core import prime_to_l_part

from oracles import is_prime_trial, valuation

SMALL_PRIMES = [q for q in range(2, 60) if is_prime_trial(q)]
nonzero_rats = st.fractions().filter(lambda x: x != 0)
# small enough for the trial-division oracle
small_rats = st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**6).filter(lambda x: x != 0)


@pytest.mark.parametrize(
    "x, l, expected",
    [(Fraction(1), 5, 0), (Fraction(691, 32760), 691, 1), (Fraction(1, 252), 7, -1), (Fraction(-50, 3), 5, 2)],
)
def test_lval_examples(x, l, expected):
    assert lval(x, l) == expected


def test_lval_errors():
    with pytest.raises(ZeroInput):
        lval(0, 5)
    with pytest.raises(NotPrime):
        lval(10, 4)


def test_linv_abs_examples():
    assert linv_abs(2 * 691, 691) == LPower(691, 1)
    assert linv_abs(1, 13).value == 1
    assert linv_abs(2 * 3617, 3617).exponent == 1
    with pytest.raises(NegativeValuation):
        linv_abs(Fraction(1, 5), 5)
    with pytest.raises(ZeroInput):
        linv_abs(0, 3)


def test_is_prime_examples():
    assert is_prime(691)
    assert is_prime(3617)
    assert not is_prime(1)
    assert not is_prime(0)


def test_is_prime_matches_trial_division():
    assert [m for m in range(5000) if is_prime(m)] == [m for m in range(5000) if is_prime_trial(m)]


@pytest.mark.parametrize(
    "m, expected",
    [
        (2**61 - 1, True),
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to the first nine prime bases
        (18446744073709551557, True),  # largest prime below 2^64
        (2**64 + 1, False),
        (2**89 - 1, True),
    ],
)
def test_is_prime_large(m, expected):
    assert is_prime(m) is expected


def test_lpower_value_and_validation():
    assert LPower(5, 3).value == 125
    assert int(LPower(7, 0)) == 1
    with pytest.raises(NotPrime):
        LPower(6, 1)
    with pytest.raises(NegativeValuation):
        LPower(5, -1)


@settings(max_examples=200)
@given(nonzero_rats, nonzero_rats, st.sampled_from(SMALL_PRIMES))
def test_lval_is_additive(x, y, l):
    assert lval(x * y, l) == lval(x, l) + lval(y, l)


@settings(max_examples=200)
@given(small_rats, st.sampled_from(SMALL_PRIMES))
def test_lval_matches_factorisation(x, l):
    assert lval(x, l) == valuation(x, l)


@settings(max_examples=200)
@given(nonzero_rats, st.sampled_from(SMALL_PRIMES))
def test_prime_to_l_part_reconstructs(x, l):
    unit = prime_to_l_part(x, l)
    assert unit.numerator % l != 0 and unit.denominator % l != 0
    assert Fraction(l) ** lval(x, l) * unit == abs(x)


@settings(max_examples=200)
@given(nonzero_rats, nonzero_rats)
def test_rational_arithmetic_is_exact(a, b):
    assert (a / b) * (b / a) == 1
    assert (a + b) - b == a
