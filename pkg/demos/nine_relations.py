"""Relations of the semigroup generated by X^2 and zeta_5*X^3, found by search."""

from polysemigroup import Cyclotomic, Polynomial, search_relations, verify_relation

K = Cyclotomic(5)
F = Polynomial.monomial(K, 1, 2)
G = Polynomial.monomial(K, K.zeta, 3)

for rel in search_relations(F, G, 200):
    print(rel.degree, rel, verify_relation(rel, F, G))
