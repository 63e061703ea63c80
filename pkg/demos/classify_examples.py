"""One pair from each branch of the classifier, plus a free pair."""

from polysemigroup import Cyclotomic, Polynomial, Rationals, chebyshev, classify_poly, iterate

Q = Rationals()
K = Cyclotomic(5)
H = Polynomial(Q, [0, 1, 0, 1])

pairs = [
    ("monomial", Polynomial.monomial(K, 1, 2), Polynomial.monomial(K, K.zeta, 3)),
    ("chebyshev", chebyshev(2, Q), chebyshev(3, Q).scale(Q(-1))),
    ("common root", H.scale(Q(-1)), iterate(H, 2)),
    ("free", Polynomial.monomial(Q, 2, 2), Polynomial.monomial(Q, 3, 3)),
]

for name, F, G in pairs:
    c = classify_poly(F, G)
    print(f"{name:12} F = {F}   G = {G}")
    print(f"{'':12} {c.verdict} {c.case or ''} witness: {c.witness}")
