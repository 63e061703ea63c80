import pytest
from hypothesis import given
from hypothesis import strategies as st

from polysemigroup import (
    Cyclotomic,
    Polynomial,
    Rationals,
    Relation,
    case3_relation,
    chebyshev,
    compose,
    eval_word,
    iterate,
    lemma33_params,
    lemma33_relation,
    parse_polynomial,
    search_relations,
    verify_relation,
)
from polysemigroup.errors import BoundTooSmall, DivisibilityUnsatisfied
from polysemigroup.semigroup import pretty_word, relation_from_words, word_degree

Q = Rationals()
K5 = Cyclotomic(5)
z5 = K5.zeta
F5 = parse_polynomial("X^2", K5)
G5 = parse_polynomial("z*X^3", K5)


def test_word_helpers():
    assert word_degree("FGG", 2, 3) == 18
    assert pretty_word("FFGFFF") == "F^2 o G o F^3"
    assert str(Relation("FFG", "FGF", 12)) == "F^2 o G = F o G o F"
    with pytest.raises(ValueError):
        Relation("FXG", "F", 2)
    with pytest.raises(ValueError):
        relation_from_words("FG", "FF", 2, 3)


def test_eval_word_examples():
    assert eval_word("F", F5, G5) == F5
    assert eval_word("FG", F5, G5) == Polynomial.monomial(K5, z5**2, 6)
    assert eval_word("GFF", F5, G5) == Polynomial.monomial(K5, z5, 12)


def test_verify_relation_examples():
    assert verify_relation(relation_from_words("FGGGG", "GGGGF", 2, 3), F5, G5)
    assert not verify_relation(relation_from_words("FG", "GF", 2, 3), F5, G5)
    assert verify_relation(Relation("FGF", "FGF", 12), F5, G5)


def test_relation_json():
    r = Relation("FGGF", "GFFG", 36, True)
    assert r.to_json() == {"lhs": "FGGF", "rhs": "GFFG", "degree": 36, "verified": True}
    assert Relation("GFFG", "FGGF", 36).normalized().lhs == "FGGF"


def test_search_first_relation():
    rels = search_relations(F5, G5, 250)
    assert rels
    # two relations tie at the lowest degree; ties are broken lexicographically
    head = [(r.lhs, r.rhs, r.degree) for r in rels[:2]]
    assert head == [("FGFG", "GGFF", 36), ("FGGF", "GFFG", 36)]
    assert rels[2].degree > 36
    assert all(r.verified for r in rels)


def test_search_free_pair_is_empty():
    assert search_relations(parse_polynomial("2*X^2", Q), parse_polynomial("3*X^3", Q), 10**4) == []


def test_search_chebyshev_pair():
    T2, T3 = chebyshev(2, Q), chebyshev(3, Q)
    rels = search_relations(T2, T3.scale(Q(-1)), 50)
    assert ("FFG", "FGF", 12) in [(r.lhs, r.rhs, r.degree) for r in rels]


def test_search_bound_too_small():
    with pytest.raises(BoundTooSmall):
        search_relations(F5, G5, 5)


def test_search_is_deterministic_and_sorted():
    a = search_relations(F5, G5, 3000)
    b = search_relations(F5, G5, 3000)
    assert a == b
    assert a == sorted(a, key=lambda r: (r.degree, r.lhs, r.rhs))


def test_search_relations_are_sound_and_trimmed():
    for r in search_relations(F5, G5, 5000):
        assert r.lhs != r.rhs
        assert r.is_trimmed()
        assert verify_relation(r, F5, G5)


def test_search_parallel_matches_serial():
    assert search_relations(F5, G5, 3000, jobs=2) == search_relations(F5, G5, 3000)


def test_search_max_relations():
    rels = search_relations(F5, G5, 10**4, max_relations=1)
    assert len(rels) == 1 and rels[0].degree == 36


def test_search_generic_rational_pair():
    F, G = parse_polynomial("X^2+1", Q), parse_polynomial("X^3-X", Q)
    assert search_relations(F, G, 2000) == []


def test_lemma33_params_examples():
    assert lemma33_params(5, 2) == (0, 4)
    assert lemma33_params(4, 2) == (2, 1)
    assert lemma33_params(1, 7) == (0, 1)
    assert lemma33_params(3, 2) == (0, 2)
    assert lemma33_params(4, 3) == (0, 2)


@given(st.integers(1, 60), st.integers(2, 9))
def test_lemma33_params_is_smallest(ell, m):
    i, j = lemma33_params(ell, m)
    assert (m**i * (m**j - 1)) % ell == 0
    # lexicographically smallest among (i, j) in a window
    for ii in range(i + 1):
        for jj in range(1, (j if ii == i else 2 * ell + 2)):
            assert (m**ii * (m**jj - 1)) % ell != 0


def test_lemma33_relation_examples():
    r = lemma33_relation(4, 1, 4, m=2, n=3)
    assert (r.lhs, r.rhs) == ("FFFFGFFFF", "FFFFFFFFG")
    assert verify_relation(r, F5, G5)
    K4 = Cyclotomic(4)
    F, G = parse_polynomial("X^2", K4), parse_polynomial("z*X^3", K4)
    r = lemma33_relation(2, 1, 1, i=2, m=2, n=3)
    assert (r.lhs, r.rhs) == ("FFGF", "FFFG")
    assert verify_relation(r, F, G)
    with pytest.raises(ValueError):
        lemma33_relation(0, 1, 1, i=2)


def test_case3_relation_examples():
    H = parse_polynomial("X^3+X", Q)
    F, G = H.scale(Q(-1)), iterate(H, 2)
    r = case3_relation(1, 2, 2, 1, 3)
    assert verify_relation(r, F, G)
    # s = 1: F = H, G = H^(j) gives F^(1+j) = F o G
    H = parse_polynomial("X^2+1", Q)
    for j in (2, 3):
        r = case3_relation(1, j, 1, 1, 2)
        assert (r.lhs, r.rhs) == ("F" * (1 + j), "FG")
        assert verify_relation(r, H, iterate(H, j))
    with pytest.raises(DivisibilityUnsatisfied):
        case3_relation(1, 2, 2, 3, 3)
    with pytest.raises(DivisibilityUnsatisfied):
        case3_relation(0, 2, 2, 1, 3)
    with pytest.raises(DivisibilityUnsatisfied):
        case3_relation(1, 2, 2, 2, 3, a=1, b=1)


def test_case3_relation_with_torsion_scalar():
    # F = -H, G = H^(2) with H = X^2 (lcal 0): F o F = H^(2), so use H = X^4 + X^2 composite
    H = parse_polynomial("X^3+X", Q)
    F, G = H.scale(Q(-1)), iterate(H, 2).scale(Q(-1))
    # F^(2) = H^(2) = -G, so gamma = -1 of order 2, and lcal(H) = 2
    assert iterate(F, 2) == G.scale(Q(-1))
    r = case3_relation(1, 2, 2, 2, 3)
    assert verify_relation(r, F, G)


def test_right_cancellation():
    # U o H = V o H forces U = V; compare the trimmed and untrimmed forms
    H = parse_polynomial("X^3+2*X", Q)
    U, V = parse_polynomial("X^2+1", Q), parse_polynomial("X^2+2", Q)
    assert (compose(U, H) == compose(V, H)) == (U == V)
