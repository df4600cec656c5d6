import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chorbifold.numfield import (
    I, ONE, ZERO, AlgebraicNumber, DivisionByZero, Interval, RADICANDS, RealAlgebraic,
    num, parse, pretty, real, sqrt, to_decimal,
)
from strategies import algebraic, reals, small_fractions


def approx(x):
    return sum(float(c) * math.sqrt(n) for c, n in zip(x.coeffs, RADICANDS))


def test_square_roots_square_to_integers():
    for n in RADICANDS:
        assert sqrt(n) * sqrt(n) == n


def test_products_of_radicals():
    assert sqrt(2) * sqrt(3) == sqrt(6)
    assert sqrt(6) * sqrt(10) == 2 * sqrt(15)
    assert sqrt(Fraction(3, 5)) == sqrt(15) / 5
    assert sqrt(12) == 2 * sqrt(3)


def test_sqrt_outside_the_field():
    with pytest.raises(ValueError):
        sqrt(7)


def test_i_squared():
    assert I * I == -1
    assert (1 + I).abs2() == 2


def test_zero_division():
    with pytest.raises(DivisionByZero):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        AlgebraicNumber().inverse()


@given(reals())
def test_sign_agrees_with_float(x):
    f = approx(x)
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)
    if x.is_zero():
        assert x.sign() == 0


def test_sign_of_near_cancellation():
    # 99 - 70√2 ≈ 0.00505; 1 - 70√2/99 is tiny but positive
    x = 99 - 70 * sqrt(2)
    assert x.sign() == 1
    y = 5 * sqrt(2) + 4 * sqrt(3) - 3 * sqrt(5) - 2 * sqrt(30) + 8
    assert y.sign() == (1 if approx(y) > 0 else -1)
    assert (sqrt(2) + sqrt(3) - sqrt(10)).sign() == -1   # 3.146 − 3.162


@given(algebraic(), algebraic(), algebraic())
@settings(max_examples=150, deadline=None)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == 1


@given(reals())
def test_real_inverse(x):
    if not x.is_zero():
        assert x * x.inverse() == ONE
        assert abs(approx(x.inverse()) - 1 / approx(x)) < 1e-6 * max(1, abs(1 / approx(x)))


@given(algebraic())
def test_text_roundtrip(z):
    assert parse(str(z)) == z


def test_parse_examples():
    assert parse("(3)*sqrt(1) - (1/2)*i*sqrt(6)") == 3 - I * sqrt(6) / 2
    assert parse("0") == 0
    assert parse("(2)*sqrt(8)") == 4 * sqrt(2)
    with pytest.raises(ValueError):
        parse("(1)*sqrt(7)")
    with pytest.raises(ValueError):
        parse("(1)*sqrt(2) (1)*sqrt(3)")


def test_pretty():
    assert pretty(3 + 5 * sqrt(2)) == "3 + 5√2"
    assert pretty(-1 + I * sqrt(3)) == "-1 + i√3"
    assert pretty(0) == "0"


def test_to_decimal_round_half_even():
    assert to_decimal(real(Fraction(1, 8)), 2) == "0.12"
    assert to_decimal(real(Fraction(3, 8)), 2) == "0.38"
    assert to_decimal(sqrt(2), 6) == "1.414214"
    assert to_decimal(-sqrt(15) / 5, 6) == "-0.774597"


def test_galois_conjugates():
    x = 1 + sqrt(2) + sqrt(30)
    norm = x
    for g in range(1, 8):
        norm = norm * x.galois(g)
    assert norm.is_rational()


def test_interval_arithmetic_contains_true_values():
    rng = random.Random(7)
    for _ in range(200):
        a, b = Fraction(rng.randint(-50, 50), rng.randint(1, 9)), Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        A, B = Interval(a - Fraction(1, 100), a + Fraction(1, 100)), Interval(b, b + Fraction(1, 50))
        for op in (lambda x, y: x + y, lambda x, y: x - y, lambda x, y: x * y):
            assert op(a, b) in op(A, B)
        if not B.lo <= 0 <= B.hi:
            assert a / b in A / B


def test_interval_sqrt_and_round_out():
    iv = Interval(2).sqrt(80)
    assert iv.lo * iv.lo <= 2 <= iv.hi * iv.hi
    r = Interval(Fraction(1, 3)).round_out(20)
    assert r.lo <= Fraction(1, 3) <= r.hi and r.width < Fraction(1, 2 ** 18)


def test_enclosure_contains_value():
    x = 3 * sqrt(5) - 7 * sqrt(6)
    iv = x.enclose(Fraction(1, 10 ** 12))
    assert iv.lo <= Fraction(approx(x)) + Fraction(1, 10 ** 9)
    assert iv.width <= Fraction(1, 10 ** 12)


def test_coercion():
    assert num(2) == AlgebraicNumber(real(2))
    assert real(Fraction(1, 2)) + Fraction(1, 2) == 1
    assert real("(1/2)*sqrt(2)") == sqrt(2) / 2
    with pytest.raises(ValueError):
        real("x")
