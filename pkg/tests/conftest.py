"""Shared hypothesis strategies and settings."""

import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from polysemigroup import Cyclotomic, LinearMap, Polynomial, PrimeField, Rationals

settings.register_profile(
    "default",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much,
                             HealthCheck.large_base_example],
)
settings.load_profile("default")

Q = Rationals()

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
small_ints = st.integers(min_value=-3, max_value=3)

FIELDS = [Q, Cyclotomic(3), Cyclotomic(4), Cyclotomic(5), Cyclotomic(6), PrimeField(7), PrimeField(11)]


@st.composite
def elements(draw, field, nonzero=False):
    if field.characteristic:
        lo = 1 if nonzero else 0
        return field(draw(st.integers(min_value=lo, max_value=field.characteristic - 1)))
    d = field.absolute_degree()
    if d == 1:
        value = field(draw(small_fractions))
    else:
        coeffs = [draw(small_fractions) for _ in range(d)]
        z = field.gen
        value = field(0)
        for c in reversed(coeffs):
            value = value * z + field(c)
    if nonzero and value.is_zero():
        return field(1)
    return value


@st.composite
def field_and_element(draw, nonzero=False):
    field = draw(st.sampled_from(FIELDS))
    return field, draw(elements(field, nonzero))


@st.composite
def polynomials(draw, field, min_degree=2, max_degree=4, monic=False):
    m = draw(st.integers(min_value=min_degree, max_value=max_degree))
    coeffs = [draw(elements(field)) for _ in range(m)]
    lead = field(1) if monic else draw(elements(field, nonzero=True))
    return Polynomial(field, coeffs + [lead])


@st.composite
def linear_maps(draw, field):
    return LinearMap(draw(elements(field, nonzero=True)), draw(elements(field)))


def frac(a, b=1):
    return Fraction(a, b)


# --- pair generators shared by the property and acceptance suites ---------

PAIR_KINDS = ("monomial", "chebyshev", "common_root", "generic")


def _poly_over(field, coeffs):
    return Polynomial(field, [field(c) for c in coeffs])


@st.composite
def constructed_pairs(draw, field, kind=None, max_degree=4, conjugate_pair=True):
    """(kind, F, G): a pair built to be non-free, or a generic random pair."""
    from polysemigroup import chebyshev, conjugate, iterate

    kind = kind or draw(st.sampled_from(PAIR_KINDS))
    degrees = st.integers(2, max_degree)
    if kind == "monomial":
        m, n = draw(degrees), draw(degrees)
        tau = draw(st.sampled_from(field.torsion_elements()))
        F = Polynomial.monomial(field, field(1), m)
        G = Polynomial.monomial(field, tau, n)
    elif kind == "chebyshev":
        m, n = draw(degrees), draw(degrees)
        F = chebyshev(m, field).scale(field(draw(st.sampled_from([1, -1]))))
        G = chebyshev(n, field).scale(field(draw(st.sampled_from([1, -1]))))
    elif kind == "common_root":
        a = draw(st.sampled_from([1, -1, 2, Fraction(1, 2), 3]))
        c = draw(st.sampled_from([1, -1, 2, -3, Fraction(1, 3)]))
        H = _poly_over(field, [c, 0, a])
        i, j = draw(st.sampled_from([(1, 1), (1, 2), (2, 1)] if max_degree >= 4 else [(1, 1)]))
        alpha = field(draw(st.sampled_from([1, -1])))
        beta = field(draw(st.sampled_from([1, -1])))
        F, G = iterate(H, i).scale(alpha), iterate(H, j).scale(beta)
    else:
        F = draw(polynomials(field, 2, max_degree))
        G = draw(polynomials(field, 2, max_degree))
    if conjugate_pair and kind != "generic" and draw(st.booleans()):
        L = draw(linear_maps(field))
        F, G = conjugate(F, L), conjugate(G, L)
    return kind, F, G


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
