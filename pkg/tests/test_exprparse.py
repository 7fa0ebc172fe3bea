import math
from fractions import Fraction

import pytest

from lcgspec.errors import ExpressionError
from lcgspec.exprparse import parse_endpoint, parse_int_expr


@pytest.mark.parametrize(
    "text,expected",
    [
        ("69069", 69069),
        ("2^32", 2**32),
        ("2^35", 2**35),
        ("10^10", 10**10),
        ("10^8+1", 10**8 + 1),
        ("(69068)^2", 69068**2),
        ("(69068)^6", 69068**6),
        ("(2+3)*4", 20),
        ("2*3^2", 18),  # power binds tighter than *
        ("2^3^2", 512),  # right-associative
        ("-5+8", 3),
        ("--7", 7),
        ("2**10", 1024),  # ** alias
        ("3 × 4", 12),  # unicode multiplication sign
        ("7 − 9", -2),  # unicode minus
    ],
)
def test_parse_int_expr(text, expected):
    assert parse_int_expr(text) == expected


@pytest.mark.parametrize(
    "text",
    [
        "", "()", "2^", "2^^3", "1/2", "0.5", "pi", "2 3", "x^2",
        "2^(1+1", "4!",
    ],
)
def test_parse_int_expr_rejects(text):
    with pytest.raises(ExpressionError):
        parse_int_expr(text)


def test_parse_int_expr_guards_blowup():
    with pytest.raises(ExpressionError):
        parse_int_expr("2^100000")  # exponent above the sanity limit
    with pytest.raises(ExpressionError):
        parse_int_expr("(10^1000)^100000")
    with pytest.raises(ExpressionError):
        parse_int_expr("2^(10^7)")


def test_decimal_endpoints_are_binary_doubles():
    # literal decimals mean the IEEE-754 double a file of published
    # figures would have carried, compared exactly afterwards
    assert parse_endpoint("0.2") == Fraction(float("0.2"))
    assert parse_endpoint("0.2") != Fraction(1, 5)
    assert parse_endpoint("0.2") > Fraction(1, 5)
    assert parse_endpoint("0.5") == Fraction(1, 2)  # exactly representable
    assert parse_endpoint("0.580815") == Fraction(float("0.580815"))


def test_integer_endpoints_are_exact():
    assert parse_endpoint("0") == 0
    assert parse_endpoint("1") == 1
    assert parse_endpoint("1/2") == Fraction(1, 2)
    assert parse_endpoint("3/4") == Fraction(3, 4)


def test_symbolic_endpoints_round_to_twelve_digits():
    got = parse_endpoint("1/pi^2")
    assert got.denominator <= 10**12
    assert abs(got - Fraction(1 / math.pi**2)) < Fraction(1, 10**12)
    assert got == Fraction(round(Fraction(1 / math.pi**2) * 10**12), 10**12)

    got = parse_endpoint("1-1/e")
    assert got == Fraction(round(Fraction(1 - 1 / math.e) * 10**12), 10**12)


def test_symbolic_mixed_with_decimal_is_tainted():
    # any expression touching pi/e is rounded, even if a decimal appears
    got = parse_endpoint("0.5*pi")
    assert got == Fraction(round(Fraction(0.5 * math.pi) * 10**12), 10**12)


def test_pure_decimal_arithmetic_stays_exact_on_doubles():
    # 0.2 + 0.3 on exact rationals of the doubles, not float addition
    got = parse_endpoint("0.2 + 0.3")
    assert got == Fraction(float("0.2")) + Fraction(float("0.3"))


def test_parse_endpoint_rejects():
    for text in ("", "0.2:0.9", "two", "1//2", "e^"):
        with pytest.raises(ExpressionError):
            parse_endpoint(text)
