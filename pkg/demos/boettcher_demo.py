"""Boettcher coordinate of X^2 + X^3: L with F(L(X)) = L(X^2) up to X^12."""

from polysemigroup import Polynomial, Rationals, TruncatedSeries, boettcher, s_compose

Q = Rationals()
N = 12
F = TruncatedSeries.from_polynomial(Polynomial(Q, [0, 0, 1, 1]), N)
L = boettcher(F, Q(1), N)
print("L =", L)
X2 = TruncatedSeries.monomial(Q, 1, 2, N)
print("F o L == L o X^2 mod X^13:", s_compose(F, L).congruent(s_compose(L, X2), N))
