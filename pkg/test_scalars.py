#!/usr/bin/env python3
"""
Exact scalar arithmetic over Q, Q(i) and the rational quaternions
"""
from fractions import Fraction

import pytest
from hypothesis import given, seed, settings as hyp_settings, strategies as st

from hexanet.core.exceptions import RingMismatch
from hexanet.services.scalars import Ring, Scalar, conjugate, format_scalar, parse_scalar, quat_mul, reduced_trace

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=5)
quaternions = st.builds(Scalar.quat, rationals, rationals, rationals, rationals)


def test_quaternion_units():
    i, j, k = Scalar.quat(0, 1), Scalar.quat(0, 0, 1), Scalar.quat(0, 0, 0, 1)
    minus_one = Scalar.quat(-1)

    assert i * i == minus_one
    assert j * j == minus_one
    assert k * k == minus_one
    assert i * j == k
    assert j * i == -k
    assert quat_mul(j, k) == i
    assert k * i == j


def test_conjugate_and_trace():
    i, j, k = Scalar.quat(0, 1), Scalar.quat(0, 0, 1), Scalar.quat(0, 0, 0, 1)
    x = Scalar.quat(1, 2, -3, 4)

    assert conjugate(x) == Scalar.quat(1, -2, 3, -4)
    assert reduced_trace(x) == Scalar.quat(2)
    assert reduced_trace(i * k * -j) == Scalar.quat(-2)
    assert reduced_trace(x * j) == reduced_trace(j * x)
    assert conjugate(Scalar.rat(5)) == Scalar.rat(5)


def test_gaussian_arithmetic():
    x = Scalar.gauss(1, 1)

    assert x * x == Scalar.gauss(0, 2)
    assert x * x.conjugate() == Scalar.gauss(2)
    assert x.norm_sq() == 2
    assert Scalar.gauss(2) / x == Scalar.gauss(1, -1)
    assert (x + 1).real == 2


def test_rational_inverse_and_division():
    x = Scalar.rat(Fraction(-3, 4))

    assert x.inverse() == Scalar.rat(Fraction(-4, 3))
    assert Scalar.rat(1) / x * x == Scalar.rat(1)
    with pytest.raises(ZeroDivisionError):
        Scalar.zero(Ring.RAT).inverse()


def test_mixed_rings_need_embed():
    with pytest.raises(RingMismatch):
        Scalar.rat(1) + Scalar.gauss(1)
    assert Scalar.rat(1).embed(Ring.GAUSS) + Scalar.gauss(0, 1) == Scalar.gauss(1, 1)
    with pytest.raises(RingMismatch):
        Scalar.gauss(1, 1).embed(Ring.RAT)
    with pytest.raises(RingMismatch):
        Scalar(Ring.RAT, 1, 1)


def test_format_scalar():
    cases = [
        {"value": Scalar.rat(Fraction(-3, 2)), "text": "-3/2"},
        {"value": Scalar.rat(5), "text": "5/1"},
        {"value": Scalar.gauss(1, -1), "text": "1/1-1/1 i"},
        {"value": Scalar.quat(0, 1, Fraction(1, 2), -2), "text": "0/1+1/1 i+1/2 j-2/1 k"},
    ]
    for case in cases:
        assert format_scalar(case["value"]) == case["text"]


def test_parse_scalar():
    cases = [
        {"text": "2", "value": Scalar.rat(2)},
        {"text": "-7/3", "value": Scalar.rat(Fraction(-7, 3))},
        {"text": "1/1+2/1 i", "value": Scalar.gauss(1, 2)},
        {"text": "1-i", "value": Scalar.gauss(1, -1)},
        {"text": "j", "value": Scalar.quat(0, 0, 1)},
        {"text": "1/2 + 1/3 k", "value": Scalar.quat(Fraction(1, 2), 0, 0, Fraction(1, 3))},
    ]
    for case in cases:
        assert parse_scalar(case["text"]) == case["value"], case["text"]

    assert parse_scalar("3", Ring.GAUSS) == Scalar.gauss(3)
    with pytest.raises(RingMismatch):
        parse_scalar("i", Ring.RAT)
    assert parse_scalar("  -7/3\n") == Scalar.rat(Fraction(-7, 3))
    for bad in ("", "   ", "1/0", "1+", "x", "1 2", "1 /2", "1/ 2", "1/1+2 3/1 i"):
        with pytest.raises(ValueError):
            parse_scalar(bad)


@seed(20240611)
@hyp_settings(max_examples=60, deadline=None)
@given(quaternions, quaternions)
def test_quaternion_norm_is_multiplicative(x, y):
    assert (x * y).norm_sq() == x.norm_sq() * y.norm_sq()
    assert (x * y).conjugate() == y.conjugate() * x.conjugate()


@seed(20240611)
@hyp_settings(max_examples=60, deadline=None)
@given(quaternions)
def test_format_parse_agree(x):
    assert parse_scalar(format_scalar(x), Ring.QUAT) == x
