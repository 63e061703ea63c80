from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polysemigroup import (
    INFINITY,
    Cyclotomic,
    Polynomial,
    PrimeField,
    RationalFunction,
    Rationals,
    TruncatedSeries,
    boettcher,
    gap_stat,
    moebius_to_zero,
    parse_polynomial,
    reciprocal_conjugate,
    s_compose,
    s_invert,
)
from polysemigroup.errors import (
    BadRootChoice,
    CharDividesDegree,
    DegreeConditionViolated,
    InnerSeriesHasConstantTerm,
    NoSolution,
    NotAFixedPoint,
    NotDegreeOne,
    RamificationOne,
    ZeroSeries,
)
from polysemigroup.parsing import parse_rational
from polysemigroup.series import gap_stat_is_certain

from conftest import small_fractions

Q = Rationals()


def S(text, N=12, field=Q):
    return TruncatedSeries.from_polynomial(parse_polynomial(text, field), N)


def T(coeffs, N, field=Q):
    """A genuinely truncated series."""
    return TruncatedSeries(field, coeffs, N)


# frozen sympy results: Boettcher coordinate of X^2 + X^3 (root 1), X^2..X^8
BOETTCHER_X2_X3 = [Fraction(-1, 2), Fraction(3, 8), Fraction(-3, 4), Fraction(191, 128),
                   Fraction(-43, 16), Fraction(5059, 1024), Fraction(-83, 8)]
# frozen sympy results: reversion of X + X^2 + 2X^3, X^2..X^6
INVERT_X_X2_2X3 = [-1, 0, 5, -16, 14]


def test_construction():
    s = T([0, 1, 2, 3], 5)
    assert s.precision == 5
    assert s.coeff(4) == Q(0)
    with pytest.raises(ValueError):
        s.coeff(6)
    assert str(s) == "X + 2*X^2 + 3*X^3 + O(X^6)"


def test_compose_examples():
    assert s_compose(S("X+X^2"), S("X^2")).to_polynomial() == parse_polynomial("X^2+X^4", Q)
    assert s_compose(S("X^2"), S("X+X^2")).to_polynomial() == parse_polynomial("X^2+2*X^3+X^4", Q)
    K = Cyclotomic(5)
    got = s_compose(S("X^3", field=K), S("z*X^2", field=K))
    assert got.to_polynomial() == Polynomial.monomial(K, K.zeta**3, 6)


def test_compose_precision_tracking():
    F = T([0, 1, 1, 1, 1, 1], 5)
    G = T([0, 0, 1, 1, 1, 1], 5)
    FG = s_compose(F, G)
    # coefficients of F beyond X^5 cannot reach degree <= 5 since G starts at X^2
    assert FG.precision == 5
    GF = s_compose(G, F)
    assert GF.precision == 5
    with pytest.raises(InnerSeriesHasConstantTerm):
        s_compose(F, TruncatedSeries._raw(Q, [Q(1).rep, Q(1).rep], 1))


def test_invert_examples():
    assert s_invert(S("X")).to_polynomial() == parse_polynomial("X", Q)
    M = s_invert(T([0, 1, 1], 6))
    assert [M.coeff(i) for i in range(1, 7)] == [Q(c) for c in (1, -1, 2, -5, 14, -42)]
    assert s_invert(S("2*X")).to_polynomial() == parse_polynomial("X/2", Q)
    M = s_invert(T([0, 1, 1, 2], 6))
    assert [M.coeff(i) for i in range(2, 7)] == [Q(c) for c in INVERT_X_X2_2X3]
    with pytest.raises(NotDegreeOne):
        s_invert(S("X^2"))


def test_boettcher_examples():
    L = boettcher(S("X^3", 10), Q(1))
    assert L.to_polynomial() == parse_polynomial("X", Q)
    F = T([0, 0, 1, 1], 10)
    L = boettcher(F, Q(1))
    assert [L.coeff(i) for i in range(2, 9)] == [Q(c) for c in BOETTCHER_X2_X3]
    X2 = S("X^2", 20)
    assert s_compose(F, L).congruent(s_compose(L, X2), L.precision)


def test_boettcher_errors():
    with pytest.raises(BadRootChoice):
        boettcher(S("2*X^2+X^3"), Q(1))
    F2 = TruncatedSeries.from_polynomial(Polynomial(PrimeField(2), [0, 0, 1, 1]), 8)
    with pytest.raises(CharDividesDegree):
        boettcher(F2, PrimeField(2)(1))
    with pytest.raises(NoSolution):
        boettcher(F2, PrimeField(2)(1), check_char=False)


def test_gap_stat_examples():
    assert gap_stat(S("X^2+X^5")) == 3
    assert gap_stat(S("X^4")) == INFINITY
    assert gap_stat_is_certain(S("X^4"))
    assert not gap_stat_is_certain(T([0, 0, 1], 4))
    H = S("X^2+X^3", 20)
    assert gap_stat(s_compose(H, S("X^2", 20))) == 2 * gap_stat(H)
    with pytest.raises(ZeroSeries):
        gap_stat(T([0, 0], 3))


def test_reciprocal_conjugate_examples():
    assert reciprocal_conjugate(parse_polynomial("X^2", Q), 8).to_polynomial() == parse_polynomial("X^2", Q)
    U = reciprocal_conjugate(parse_polynomial("X^2+1", Q), 8)
    assert [U.coeff(i) for i in range(9)] == [Q(c) for c in (0, 0, 1, 0, -1, 0, 1, 0, -1)]
    U = reciprocal_conjugate(parse_rational("X^3/(X+1)", Q), 8)
    assert U.to_polynomial() == parse_polynomial("X^2+X^3", Q)
    with pytest.raises(DegreeConditionViolated):
        reciprocal_conjugate(parse_rational("X^2/(X+1)", Q), 8)


def test_moebius_to_zero_examples():
    assert moebius_to_zero(parse_polynomial("X^2", Q), Q(0), 8).to_polynomial() == parse_polynomial("X^2", Q)
    assert moebius_to_zero(parse_polynomial("X^2", Q), INFINITY, 8).to_polynomial() == parse_polynomial("X^2", Q)
    assert moebius_to_zero(parse_polynomial("X^2-2*X+2", Q), Q(1), 8).to_polynomial() == parse_polynomial("X^2", Q)
    with pytest.raises(NotAFixedPoint):
        moebius_to_zero(parse_polynomial("X^2+1", Q), Q(0), 8)
    with pytest.raises(RamificationOne):
        moebius_to_zero(parse_polynomial("X^2+X", Q), Q(0), 8)


def test_to_json():
    js = T([0, 1, Fraction(1, 2)], 3).to_json()
    assert js == {"field": "Q", "precision": 3, "coeffs": ["0", "1", "1/2", "0"], "exact": False}


# --- properties ------------------------------------------------------------


@st.composite
def unit_series(draw, N=10):
    lead = draw(small_fractions.filter(bool))
    rest = [draw(small_fractions) for _ in range(N - 1)]
    return T([0, lead] + rest, N)


@given(unit_series())
def test_invert_round_trip(L):
    M = s_invert(L)
    x = S("X", L.precision)
    assert s_compose(L, M).congruent(x, L.precision)
    assert s_compose(M, L).congruent(x, L.precision)


@given(unit_series(), unit_series(), unit_series())
def test_compose_associative(A, B, C):
    left = s_compose(s_compose(A, B), C)
    right = s_compose(A, s_compose(B, C))
    N = min(left.precision, right.precision)
    assert left.congruent(right, N)
