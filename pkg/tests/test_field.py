from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polysemigroup import (
    Cyclotomic,
    ExtensionRequest,
    FiniteField,
    PrimeField,
    Rationals,
    extend,
    nth_root_or_request,
    parse_field_spec,
    root_of_unity_order,
)
from polysemigroup.errors import DivisionByZero, FieldMismatch, ZeroDivisor, ZeroInput
from polysemigroup.field import cyclotomic_polynomial, divisors, euler_phi, is_prime

from conftest import elements, field_and_element

Q = Rationals()


def test_rational_arithmetic():
    assert Q(Fraction(1, 2)) + Q(Fraction(1, 3)) == Q(Fraction(5, 6))
    assert Q(Fraction(2, 4)).rep == Fraction(1, 2)
    assert Q(Fraction(1, -3)).rep.denominator == 3


def test_zeta_times_zeta4_is_one():
    K = Cyclotomic(5)
    z = K.zeta
    assert (z * z**4).is_one()
    assert z**5 == K(1)
    assert z != K(1)


def test_prime_field_product():
    F7 = PrimeField(7)
    assert F7(3) * F7(5) == F7(1)
    assert F7(3).inverse() == F7(5)


def test_cyclotomic_reduces_mod_phi():
    K = Cyclotomic(5)
    z = K.zeta
    # 1 + z + z^2 + z^3 + z^4 = 0
    assert (K(1) + z + z**2 + z**3 + z**4).is_zero()
    assert len(z.rep) == euler_phi(5)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_integer_helpers():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**61 - 1)
    assert euler_phi(12) == 4


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Q(1) / Q(0)
    with pytest.raises(DivisionByZero):
        PrimeField(5)(0).inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Q(1) + PrimeField(5)(1)
    with pytest.raises(FieldMismatch):
        Cyclotomic(3).zeta * Cyclotomic(5).zeta


def test_root_of_unity_order_examples():
    assert root_of_unity_order(Cyclotomic(5).zeta) == 5
    assert root_of_unity_order(Q(2)) is None
    assert root_of_unity_order(Q(-1)) == 2
    assert root_of_unity_order(PrimeField(7)(3)) == 6
    assert root_of_unity_order(-Cyclotomic(5).zeta) == 10
    assert root_of_unity_order(Cyclotomic(5).zeta + 1) is None
    with pytest.raises(ZeroInput):
        root_of_unity_order(Q(0))


def test_root_of_unity_order_extension_field():
    F4 = FiniteField(2, [1, 1, 1])
    assert root_of_unity_order(F4.gen) == 3


def test_nth_root_examples():
    assert nth_root_or_request(Q(4), 2) == Q(2)
    req = nth_root_or_request(Q(2), 2)
    assert isinstance(req, ExtensionRequest)
    assert req.defining_relation == "t^2 = 2"
    req7 = nth_root_or_request(PrimeField(7)(2), 3)
    assert isinstance(req7, ExtensionRequest)
    assert nth_root_or_request(PrimeField(7)(6), 3) ** 3 == PrimeField(7)(6)
    assert nth_root_or_request(Q(Fraction(27, 8)), 3) == Q(Fraction(3, 2))
    with pytest.raises(ZeroInput):
        nth_root_or_request(Q(0), 2)


def test_nth_root_cyclotomic_torsion():
    K = Cyclotomic(5)
    z = K.zeta
    r = nth_root_or_request(z, 2)
    assert r**2 == z
    r = nth_root_or_request(K(-4), 2)
    assert isinstance(r, ExtensionRequest)
    K4 = Cyclotomic(4)
    assert nth_root_or_request(K4(-4), 2) ** 2 == K4(-4)


def test_extend_sqrt2():
    R = extend(nth_root_or_request(Q(2), 2))
    t = R.gen
    assert t * t == R(2)
    assert (t + 1) * (t - 1) == R(1)
    assert (t + 1).inverse() == t - 1


def test_extend_reducible_detects_zero_divisor():
    R = extend(ExtensionRequest(Q, 2, Q(4)))
    t = R.gen
    assert ((t - 2) * (t + 2)).is_zero()
    with pytest.raises(ZeroDivisor) as exc:
        (t - 2).inverse()
    assert "t - 2" in str(exc.value)


def test_extend_cyclotomic_zero_divisor():
    K4 = Cyclotomic(4)
    R = extend(ExtensionRequest(K4, 2, K4(-1)))
    with pytest.raises(ZeroDivisor):
        (R.gen - R.embed(K4.zeta)).inverse()


def test_extension_request_validation():
    with pytest.raises(ValueError):
        ExtensionRequest(Q, 1, Q(2))
    with pytest.raises(ValueError):
        ExtensionRequest(Q, 2, Q(0))


def test_parse_field_spec():
    assert parse_field_spec("Q") == Q
    assert parse_field_spec("Q(zeta:5)") == Cyclotomic(5)
    assert parse_field_spec("GF(7)") == PrimeField(7)
    assert str(parse_field_spec("GF(2^2:1,1,1)")) == "GF(2^2:1,1,1)"


def test_finite_field_requires_irreducible():
    with pytest.raises(ValueError):
        FiniteField(2, [1, 0, 1])  # X^2 + 1 = (X + 1)^2 over GF(2)
    with pytest.raises(ValueError):
        PrimeField(9)


def test_characteristic():
    assert Q.characteristic == 0
    assert Cyclotomic(5).characteristic == 0
    assert PrimeField(7).characteristic == 7
    assert FiniteField(3, [1, 0, 1]).characteristic == 3


def test_elements_are_immutable():
    a = Q(3)
    with pytest.raises(AttributeError):
        a.rep = Fraction(4)


def test_rendering():
    z = Cyclotomic(5).zeta
    assert str(z) == "z"
    assert str(Q(Fraction(-3, 4))) == "-3/4"
    assert str(z**2 - 2 * z + 1) == "z^2 - 2*z + 1"


# --- properties ------------------------------------------------------------


@given(st.data())
def test_canonical_form(data):
    field, a = data.draw(field_and_element())
    b = data.draw(elements(field))
    # equality agrees with identical representations, and equal values hash alike
    assert (a == b) == (a.rep == b.rep)
    c = (a + b) - b
    assert c == a and c.rep == a.rep and hash(c) == hash(a)


@given(st.data())
def test_field_axioms(data):
    field, a = data.draw(field_and_element())
    b, c = data.draw(elements(field)), data.draw(elements(field))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == field(0)
    if not a.is_zero():
        assert a * a.inverse() == field(1)


@given(st.data())
def test_order_is_exact(data):
    field, a = data.draw(field_and_element(nonzero=True))
    ell = root_of_unity_order(a)
    if ell is not None:
        assert (a**ell).is_one()
        assert all(not (a**j).is_one() for j in range(1, ell))


@given(st.data(), st.integers(min_value=1, max_value=4))
def test_nth_root_is_a_root(data, d):
    field, a = data.draw(field_and_element(nonzero=True))
    r = nth_root_or_request(a, d)
    if isinstance(r, ExtensionRequest):
        assert r.d == d and r.value == a
    else:
        assert r**d == a


@given(st.data(), st.integers(min_value=2, max_value=3))
def test_nth_root_of_power(data, d):
    field, a = data.draw(field_and_element(nonzero=True))
    r = nth_root_or_request(a**d, d)
    assert not isinstance(r, ExtensionRequest)
    assert r**d == a**d
