from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polysemigroup import (
    Cyclotomic,
    FiniteField,
    Polynomial,
    PrimeField,
    RationalFunction,
    Rationals,
    X,
    parse_constant,
    parse_expression,
    parse_polynomial,
)
from polysemigroup.errors import ParseError

from conftest import polynomials

Q = Rationals()


def test_basic_expressions():
    assert parse_expression("X^2", Q) == X(Q) ** 2
    K5 = Cyclotomic(5)
    assert parse_expression("z*X^3", K5) == Polynomial.monomial(K5, K5.zeta, 3)
    r = parse_expression("X^3/(X+1)", Q)
    assert isinstance(r, RationalFunction)
    assert str(r) == "X^3/(X + 1)"
    assert parse_expression(str(r), Q) == r


def test_precedence_and_unary_minus():
    assert parse_polynomial("2*X^2-4*X+3", Q) == Polynomial(Q, [3, -4, 2])
    assert parse_polynomial("-X^2", Q) == Polynomial(Q, [0, 0, -1])
    assert parse_polynomial("-(X+1)^2", Q) == Polynomial(Q, [-1, -2, -1])
    assert parse_polynomial("1/2*X", Q) == Polynomial(Q, [0, Fraction(1, 2)])
    assert parse_polynomial("x^2 + 3*x", Q) == Polynomial(Q, [0, 3, 1])


def test_constants():
    assert parse_constant("3/4", Q) == Q(Fraction(3, 4))
    assert parse_constant("5", PrimeField(7)) == PrimeField(7)(5)
    assert parse_constant("2/3", PrimeField(7)) == PrimeField(7)(3)
    with pytest.raises(ParseError):
        parse_constant("X", Q)


def test_reducing_rational_to_polynomial():
    assert parse_expression("(X^2-1)/(X-1)", Q) == parse_polynomial("X+1", Q)


def test_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse_expression("X^2 + $", Q)
    assert exc.value.position == 6
    with pytest.raises(ParseError):
        parse_expression("X^", Q)
    with pytest.raises(ParseError):
        parse_expression("(X+1", Q)
    with pytest.raises(ParseError):
        parse_expression("z*X", Q)
    with pytest.raises(ParseError):
        parse_expression("X/0", Q)
    with pytest.raises(ParseError):
        parse_expression("X^2 X", Q)


ROUND_TRIP_FIELDS = [Q, Cyclotomic(3), Cyclotomic(5), PrimeField(7), FiniteField(3, [1, 0, 1])]


@given(st.data())
def test_render_parse_round_trip(data):
    field = data.draw(st.sampled_from(ROUND_TRIP_FIELDS))
    F = data.draw(polynomials(field, 0, 6))
    assert parse_polynomial(str(F), field) == F


def test_round_trip_corpus():
    corpus = ["X^3 - 3*X", "X^6 - 6*X^4 + 9*X^2 - 2", "-1/2*X^5 + 7/3", "X", "-X^2 + X - 1"]
    for text in corpus:
        F = parse_polynomial(text, Q)
        assert str(F) == text
        assert parse_polynomial(str(F), Q) == F
    K5 = Cyclotomic(5)
    for text in ["z*X^3", "(z^2 + 1)*X^2 - z", "-z^3*X^4 + (z - 1)*X"]:
        F = parse_polynomial(text, K5)
        assert parse_polynomial(str(F), K5) == F
