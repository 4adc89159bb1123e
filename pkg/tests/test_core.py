from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from padw import (
    AmbiguousZero,
    DivisionByZero,
    INFINITY,
    PadicNumber,
    ParseError,
    PrecisionExhausted,
    PrimeError,
    add,
    check_prime,
    digit_sum,
    digits_of,
    div,
    format_padic,
    from_fraction,
    from_rational,
    mul,
    neg,
    ord_factorial,
    parse_padic,
    parse_rational,
    valuation,
)

from padw.core import is_prime

from oracles import factorial_valuations, vp

PRIMES = [2, 3, 5, 7, 11]


def test_from_rational_examples():
    assert from_rational(0, 1, 5, 8).is_zero
    x = from_rational(10, 1, 5, 4)
    assert (x.val, x.unit, x.relprec) == (1, 2, 4)
    y = from_rational(1, 3, 5, 4)
    assert (y.val, y.unit) == (0, 417)
    assert 3 * y.unit % 5**4 == 1


def test_from_rational_rejects_bad_precision():
    with pytest.raises(ValueError):
        from_rational(1, 1, 5, 0)


def test_add_examples():
    x = from_rational(10, 1, 5, 4)
    assert x + PadicNumber.zero(5) == x
    five = PadicNumber(5, 1, 1, 4)
    assert five + five == PadicNumber(5, 1, 2, 4)
    with pytest.raises(PrecisionExhausted):
        add(PadicNumber(5, 0, 1, 4), PadicNumber(5, 0, 624, 4))


def test_add_precision_is_min_absolute():
    x = from_rational(1, 1, 5, 10)          # known mod 5^10
    y = from_rational(25, 1, 5, 3)          # known mod 5^5
    s = x + y
    assert s.absprec == 5
    assert s.congruent(from_fraction(26, 5, 10), 5)


def test_cancellation_shrinks_relative_precision():
    x = from_rational(1, 1, 5, 6)
    y = from_rational(-1 + 125, 1, 5, 6)
    s = x + y
    assert (s.val, s.relprec) == (3, 3)


def test_mul_div_neg_examples():
    x = from_rational(7, 3, 5, 6)
    assert mul(x, from_rational(1, 1, 5, 6)) == x
    q = div(from_rational(10, 1, 5, 4), from_rational(2, 1, 5, 4))
    assert (q.val, q.unit) == (1, 1)
    m = neg(from_rational(1, 1, 5, 4))
    assert (m.val, m.unit) == (0, 5**4 - 1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        from_rational(1, 1, 3, 4) / PadicNumber.zero(3)
    with pytest.raises(PrecisionExhausted):
        from_rational(1, 1, 3, 4) / PadicNumber.zero(3, 5)


def test_valuation_examples():
    assert valuation(PadicNumber.zero(5)) == INFINITY
    assert valuation(from_rational(10, 1, 5, 8)) == 1
    assert valuation(from_rational(9, 25, 5, 8)) == -2
    with pytest.raises(AmbiguousZero):
        valuation(PadicNumber.zero(5, 7))


@pytest.mark.parametrize("n,p,expected", [(1, 2, 1), (1, 7, 1), (72, 3, 4), (125, 5, 1), (2**10, 2, 1)])
def test_digit_sum(n, p, expected):
    assert digit_sum(n, p) == expected


@pytest.mark.parametrize("n,p,expected", [(0, 3, 0), (4, 2, 3), (100, 5, 24)])
def test_ord_factorial_examples(n, p, expected):
    assert ord_factorial(n, p) == expected


@pytest.mark.parametrize("p", PRIMES)
def test_ord_factorial_matches_factoring(p):
    brute = factorial_valuations(5000, p)
    assert all(ord_factorial(n, p) == brute[n] for n in range(5001))


def test_digits_of_examples():
    assert digits_of(from_rational(10, 1, 5, 3)) == (1, [2, 0, 0])
    assert digits_of(from_rational(1, 3, 5, 3)) == (0, [2, 3, 1])
    assert digits_of(from_rational(-1, 1, 5, 3)) == (0, [4, 4, 4])


def test_literal_format():
    assert format_padic(from_rational(10, 1, 5, 3)) == "5^1*(2,0,0)+O(5^4)"
    assert format_padic(from_rational(9, 25, 5, 2)) == "5^-2*(4,1)+O(5^0)"
    assert format_padic(PadicNumber.zero(5, 8)) == "0 + O(5^8)"
    assert format_padic(PadicNumber.zero(5)) == "0"


@pytest.mark.parametrize("text", ["5^1*(2,0,0)+O(5^4)", "3^-2*(1,2,2,0)+O(3^2)", "0 + O(7^12)"])
def test_literal_round_trip(text):
    assert format_padic(parse_padic(text)) == text


@pytest.mark.parametrize("text", ["5^1*(2,0)+O(5^4)", "5^1*(7)+O(5^2)", "4^0*(1)+O(4^1)", "junk"])
def test_literal_rejects(text):
    with pytest.raises((ParseError, PrimeError)):
        parse_padic(text)


def test_parse_rational():
    assert parse_rational("15/2") == Fraction(15, 2)
    assert parse_rational("-7") == -7
    for bad in ["", "1/0", "x", "1.5"]:
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_check_prime():
    assert check_prime(2147483647) == 2147483647
    for bad in [0, 1, 4, 561, 2**31 + 11, 25326001]:
        with pytest.raises(PrimeError):
            check_prime(bad)


def test_primality_against_trial_division():
    def slow(n):
        return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))
    assert all(is_prime(n) == slow(n) for n in range(5000))


# properties

primes = st.sampled_from([2, 3, 5, 7])
ints = st.integers(-10**6, 10**6)
nonzero = ints.filter(lambda a: a != 0)


@st.composite
def padics(draw, p, N=12):
    a, b = draw(nonzero), draw(st.integers(1, 10**6))
    return from_rational(a, b, p, N)


@given(st.data())
@settings(max_examples=200, deadline=None)
def test_field_axioms_at_joint_precision(data):
    p = data.draw(primes)
    x, y, z = (data.draw(padics(p)) for _ in range(3))
    try:
        lhs, rhs = (x + y) + z, x + (y + z)
        assert lhs.congruent(rhs)
        assert (x * (y + z)).congruent(x * y + x * z)
    except PrecisionExhausted:
        assume(False)


@given(st.data())
@settings(max_examples=300, deadline=None)
def test_ultrametric_and_multiplicative(data):
    p = data.draw(primes)
    x, y = data.draw(padics(p)), data.draw(padics(p))
    assert valuation(x * y) == valuation(x) + valuation(y)
    try:
        s = x + y
    except PrecisionExhausted:
        return
    vs = s.valuation() if s.unit else Fraction(s.val)
    assert vs >= min(valuation(x), valuation(y))
    if valuation(x) != valuation(y):
        assert vs == min(valuation(x), valuation(y))


@given(primes, nonzero, st.integers(1, 10**6), st.integers(1, 20))
@settings(max_examples=300, deadline=None)
def test_from_rational_round_trip(p, a, b, N):
    x = from_rational(a, b, p, N)
    v, digits = digits_of(x)
    resummed = Fraction(p) ** v * sum(d * p**i for i, d in enumerate(digits))
    d = resummed - Fraction(a, b)
    assert d == 0 or vp(d, p) >= v + N


@given(primes, nonzero, st.integers(1, 10**6), st.integers(1, 20))
def test_literal_round_trip_property(p, a, b, N):
    x = from_rational(a, b, p, N)
    assert parse_padic(format_padic(x)) == x
