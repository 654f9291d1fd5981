"""Tests for the scalar fields"""

from fractions import Fraction

import pytest

from lib.errors import ScalarParseError, UnsupportedParameterError, WeightError
from lib.scalars import QFUNCTIONS, RATIONALS, ScalarField, field_for, q_binomial, q_int


def test_rational_parse_and_render():
    assert RATIONALS.render(RATIONALS.parse("6/8")) == "3/4"
    assert RATIONALS.render(RATIONALS.parse("-2/4")) == "-1/2"
    assert RATIONALS.render(RATIONALS.parse("(1 + 1/2)*2")) == "3"
    assert RATIONALS.render(RATIONALS.zero) == "0"


def test_convert_accepts_python_numbers():
    assert RATIONALS.convert(Fraction(3, 4)) == RATIONALS.parse("3/4")
    assert RATIONALS.convert(5) == RATIONALS.fraction(10, 2)
    with pytest.raises(ScalarParseError):
        RATIONALS.convert(True)


def test_bad_literals():
    with pytest.raises(ScalarParseError):
        RATIONALS.parse("1/0")
    with pytest.raises(ScalarParseError):
        RATIONALS.parse("q")
    with pytest.raises(ScalarParseError):
        RATIONALS.parse("2 +")
    with pytest.raises(ScalarParseError):
        RATIONALS.fraction(1, 0)


def test_unknown_field_kind():
    with pytest.raises(UnsupportedParameterError):
        ScalarField("complex")
    assert field_for("q") is QFUNCTIONS
    assert field_for("rational") is RATIONALS


def test_q_integers():
    assert QFUNCTIONS.render(q_int(1)) == "1"
    assert QFUNCTIONS.render(q_int(2)) == "(q^2+1)/(q)"
    assert QFUNCTIONS.render(q_binomial(3, 1)) == "(q^4+q^2+1)/(q^2)"
    assert q_binomial(3, 1) == q_binomial(3, 2)
    assert q_binomial(2, 3) == QFUNCTIONS.zero


def test_q_binomial_pascal_rule():
    # [m, l] = q^-l [m-1, l] + q^(m-l) [m-1, l-1]
    q = QFUNCTIONS.q
    for m in range(2, 6):
        for l in range(1, m):
            rhs = q ** (-l) * q_binomial(m - 1, l) + q ** (m - l) * q_binomial(m - 1, l - 1)
            assert QFUNCTIONS.equal(q_binomial(m, l), rhs)


def test_keys_are_canonical():
    q = QFUNCTIONS.q
    assert QFUNCTIONS.key((q ** 2 - 1) / (q - 1)) == QFUNCTIONS.key(q + 1)
    assert QFUNCTIONS.key(2 * q / (2 * q ** 2)) == QFUNCTIONS.key(1 / q)
    assert RATIONALS.key(RATIONALS.parse("4/6")) == (2, 3)


def test_q_render_round_trip():
    q = QFUNCTIONS.q
    for value in (q ** 3 - 2, (q + 1) / (q ** 2 - 3), -q ** -2, QFUNCTIONS.convert(7)):
        assert QFUNCTIONS.parse(QFUNCTIONS.render(value)) == value


def test_specialize_at_one():
    assert QFUNCTIONS.specialize_q1(q_binomial(4, 2)) == 6
    assert QFUNCTIONS.specialize_q1(q_int(5)) == 5
    q = QFUNCTIONS.q
    with pytest.raises(WeightError):
        QFUNCTIONS.specialize_q1(QFUNCTIONS.one / (q - 1))


def test_q_power_needs_q():
    with pytest.raises(UnsupportedParameterError):
        RATIONALS.q_power(2)
