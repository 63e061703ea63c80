from polysemigroup import Polynomial, RationalFunction, Rationals, parse_polynomial
from polysemigroup.parsing import parse_rational
from polysemigroup.rational import iterate_rational, poly_gcd

Q = Rationals()


def test_gcd_and_reduction():
    a, b = parse_polynomial("X^2-1", Q), parse_polynomial("X^2+2*X+1", Q)
    assert poly_gcd(a, b) == parse_polynomial("X+1", Q)
    r = RationalFunction(a, b)
    assert r.num == parse_polynomial("X-1", Q) and r.den == parse_polynomial("X+1", Q)


def test_denominator_is_monic():
    r = RationalFunction(parse_polynomial("X", Q), parse_polynomial("2*X+2", Q))
    assert r.den.lead == Q(1)


def test_compose_and_evaluate():
    F = parse_rational("X^3/(X+1)", Q)
    G = parse_rational("1/X", Q)
    FG = F.compose(G)
    assert FG == parse_rational("1/(X^3+X^2)", Q)
    assert F.evaluate(Q(1)) == Q(1) / 2
    assert iterate_rational(G, 2) == RationalFunction(parse_polynomial("X", Q))


def test_polynomial_detection():
    r = RationalFunction(parse_polynomial("2*X^2", Q), Polynomial.constant(Q, 2))
    assert r.is_polynomial() and r.as_polynomial() == parse_polynomial("X^2", Q)
