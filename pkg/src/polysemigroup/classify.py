"""Deciding whether two maps generate a free composition semigroup.

``classify_poly`` handles polynomial pairs, ``classify_series`` pairs of
power series with a superattracting fixed point at 0, and
``classify_rational`` rational maps sharing a fully ramified fixed point.
A NotFree answer always carries a relation that was checked exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from enum import Enum
from fractions import Fraction

from .errors import CharDividesDegree, HypothesisViolation
from .field import (
    ExtensionRequest,
    FieldElement,
    FieldSpec,
    Rationals,
    divisors,
    extend,
    nth_root_or_request,
    root_of_unity_order,
)
from .poly import (
    LinearMap,
    Polynomial,
    X,
    chebyshev,
    compositional_root,
    conjugate,
    gap_shift,
    is_gap_form,
    iterate,
    lcal,
)
from .rational import RationalFunction
from .semigroup import (
    Relation,
    case3_relation,
    lemma33_params,
    lemma33_relation,
    relation_from_words,
    verify_relation,
)
from .series import (
    DEFAULT_PRECISION,
    INFINITY,
    TruncatedSeries,
    boettcher,
    moebius_to_zero,
    s_compose,
    s_invert,
)


class Verdict(str, Enum):
    FREE = "Free"
    NOT_FREE = "NotFree"
    NEEDS_EXTENSION = "NeedsExtension"
    INCONCLUSIVE = "InconclusiveAtPrecision"

    def __str__(self):
        return self.value


class Case(str, Enum):
    MONOMIAL = "Monomial"
    CHEBYSHEV = "Chebyshev"
    COMMON_ROOT = "CommonRoot"

    def __str__(self):
        return self.value


@dataclass
class Classification:
    verdict: Verdict
    case: Case | None = None
    normalizer: LinearMap | TruncatedSeries | None = None
    canonical_pair: tuple | None = None
    witness: Relation | None = None
    extension: ExtensionRequest | None = None
    precision_used: int | None = None
    field: FieldSpec | None = None
    notes: list[str] = dc_field(default_factory=list)
    commuting_r: int | None = None
    details: dict = dc_field(default_factory=dict)

    @property
    def is_free(self) -> bool:
        return self.verdict == Verdict.FREE

    def to_json(self) -> dict:
        out = {"verdict": str(self.verdict),
               "case": None if self.case is None else str(self.case),
               "canonical": None if self.canonical_pair is None else [str(p) for p in self.canonical_pair]}
        if self.normalizer is None:
            out["normalizer"] = None
        else:
            out["normalizer"] = self.normalizer.to_json()
        out["witness"] = None if self.witness is None else self.witness.to_json()
        out["field"] = None if self.field is None else str(self.field)
        if self.extension is not None:
            out["extension"] = self.extension.to_json()
        if self.precision_used is not None:
            out["precision_used"] = self.precision_used
        if self.commuting_r is not None:
            out["commuting_r"] = self.commuting_r
        if self.details:
            out["details"] = {k: self.details[k] for k in sorted(self.details)}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _require_char_ok(field: FieldSpec, *degrees):
    p = field.characteristic
    for d in degrees:
        if p and d % p == 0:
            raise CharDividesDegree(f"characteristic {p} divides degree {d}")


# ---------------------------------------------------------------------------
# monomial case


def detect_monomial_conjugacy(F: Polynomial):
    """(v, a) with F = a*(X - v)^m + v, or None."""
    m = F.degree
    if m < 2:
        raise HypothesisViolation("degree must be at least 2")
    _require_char_ok(F.field, m)
    a = F.lead
    v = -F.coeff(m - 1) / (a * m)
    shift = Polynomial(F.field, [-v, 1])
    if F != (shift**m).scale(a) + v:
        return None
    return v, a


@dataclass(frozen=True)
class MonomialCertificate:
    t: FieldElement
    order: int


def _monomial_shape(F: Polynomial, G: Polynomial):
    dF = detect_monomial_conjugacy(F)
    if dF is None:
        return None
    v, a = dF
    n = G.degree
    b = G.lead
    shift = Polynomial(G.field, [-v, 1])
    if G != (shift**n).scale(b) + v:
        return None
    return v, a, b


def monomial_pair_test(F: Polynomial, G: Polynomial) -> MonomialCertificate | None:
    """Torsion certificate t = lead(G)^(m-1) / a^(n-1) when both are monomials about one center."""
    shape = _monomial_shape(F, G)
    if shape is None:
        return None
    _, a, b = shape
    t = b ** (F.degree - 1) / a ** (G.degree - 1)
    order = root_of_unity_order(t)
    return None if order is None else MonomialCertificate(t, order)


def _monomial_witness(F, G, order_bound):
    m, n = F.degree, G.degree
    for d in divisors(order_bound):
        i, j = lemma33_params(d, m)
        rel = lemma33_relation(i, 1, j, i=i, m=m, n=n)
        if verify_relation(rel, F, G):
            return Relation(rel.lhs, rel.rhs, rel.degree, True).normalized(), (i, j)
    return None, None  # pragma: no cover - the order of alpha always divides order_bound


# ---------------------------------------------------------------------------
# Chebyshev case


def _chebyshev_data(F: Polynomial):
    """(v, w) with F conjugate to +-T_m through some uX + v with u^2 = w, or None."""
    m = F.degree
    v, Fc = gap_shift(F)
    f = Fc.coeffs
    fm = f[m]
    if f[m - 2].is_zero():
        return None
    w = -f[m - 2] / (fm * m)
    T = chebyshev(m, F.field)
    for i in range(m + 1):
        if (m - i) % 2:
            if not f[i].is_zero():
                return None
        elif f[i] != fm * T.coeff(i) * w ** ((m - i) // 2):
            return None
    if not (fm * fm * w ** (m - 1)).is_one():
        return None
    return v, w


def _chebyshev_u(F: Polynomial, w: FieldElement):
    """An in-field u with u^2 = w when deg F is even, else a square root search."""
    m = F.degree
    if m % 2 == 0:
        return (F.lead * w ** ((m - 2) // 2)).inverse()
    return nth_root_or_request(w, 2)


def detect_chebyshev_conjugacy(F: Polynomial):
    """(L, eps) with L^-1 o F o L = eps*T_m, an ExtensionRequest, or None."""
    m = F.degree
    if m < 2:
        raise HypothesisViolation("degree must be at least 2")
    _require_char_ok(F.field, m)
    data = _chebyshev_data(F)
    if data is None:
        return None
    v, w = data
    u = _chebyshev_u(F, w)
    if isinstance(u, ExtensionRequest):
        return u
    L = LinearMap(u, v)
    eps = F.lead * u ** (m - 1)
    return L, eps


# ---------------------------------------------------------------------------
# common compositional root


def _common_base(m: int, n: int):
    """Largest h with m = h^i and n = h^j, as (h, i, j); None if there is none."""
    best = None
    for h in range(2, min(m, n) + 1):
        i = _log_exact(m, h)
        j = _log_exact(n, h)
        if i and j:
            best = (h, i, j)
    return best


def _all_common_bases(m: int, n: int):
    out = []
    for h in range(2, min(m, n) + 1):
        i, j = _log_exact(m, h), _log_exact(n, h)
        if i and j:
            out.append((h, i, j))
    return out


def _log_exact(m, h):
    k = 0
    while m % h == 0:
        m //= h
        k += 1
    return k if m == 1 else 0


def _scalar_order_ok(gamma: FieldElement, *polys) -> bool:
    return all((gamma ** lcal(P)).is_one() for P in polys)


def detect_common_root(F: Polynomial, G: Polynomial):
    """(A, gamma, zeta, i, j) with F = gamma*A^(i), G = zeta*A^(j) after the shared gap shift.

    Prefers the smallest deg A, then monic A, then the smaller torsion
    orders.  Returns None when nothing fits or an ExtensionRequest when only
    an extension could supply A.
    """
    m, n = F.degree, G.degree
    _require_char_ok(F.field, m, n)
    bases = _all_common_bases(m, n)
    if not bases:
        return None
    c, Fc = gap_shift(F)
    Gc = conjugate(G, LinearMap(F.field.one, c))
    if not is_gap_form(Gc):
        return None
    request = None
    for h, i, j in bases:
        rf = compositional_root(Fc, h, i)
        rg = compositional_root(Gc, h, j)
        if isinstance(rf, ExtensionRequest) or isinstance(rg, ExtensionRequest):
            request = request or (rf if isinstance(rf, ExtensionRequest) else rg)
            continue
        matches = []
        for gamma, A in rf:
            for zeta, B in rg:
                if A == B and _scalar_order_ok(gamma, A) and _scalar_order_ok(zeta, A):
                    matches.append((A, gamma, zeta, i, j))
        if matches:
            matches.sort(key=lambda t: (not t[0].lead.is_one(), root_of_unity_order(t[1]),
                                        root_of_unity_order(t[2])))
            return matches[0]
    return request


def _iterate_test(F: Polynomial, G: Polynomial):
    """Decide the common-root case through F^(j) = gamma * G^(i) in gap coordinates."""
    m, n = F.degree, G.degree
    base = _common_base(m, n)
    if base is None:
        return None
    h, i, j = base
    c, Fc = gap_shift(F)
    L = LinearMap(F.field.one, c)
    Gc = conjugate(G, L)
    if not is_gap_form(Gc):
        return None
    Fj, Gi = iterate(Fc, j), iterate(Gc, i)
    gamma = Fj.lead / Gi.lead
    if Fj != Gi.scale(gamma):
        return None
    ell = root_of_unity_order(gamma)
    if ell is None or not _scalar_order_ok(gamma, Fc, Gc):
        return None
    s = math.gcd(lcal(Fc), lcal(Gc)) or ell
    return {"h": h, "i": i, "j": j, "gamma": gamma, "ell": ell, "s": s, "L": L, "Fc": Fc, "Gc": Gc}


# ---------------------------------------------------------------------------
# polynomial classification


def classify_poly(F: Polynomial, G: Polynomial) -> Classification:
    if F.field != G.field:
        from .errors import FieldMismatch
        raise FieldMismatch(f"{F.field} vs {G.field}")
    m, n = F.degree, G.degree
    if m < 2 or n < 2:
        raise HypothesisViolation("both polynomials need degree at least 2")
    _require_char_ok(F.field, m, n)
    K = F.field

    # monomials about a common center
    shape = _monomial_shape(F, G)
    if shape is not None:
        v, a, b = shape
        t = b ** (m - 1) / a ** (n - 1)
        order = root_of_unity_order(t)
        if order is None:
            return Classification(Verdict.FREE, field=K, notes=[
                "both maps are monomials about the same center but the scalar "
                f"t = {t} has infinite multiplicative order"])
        return _monomial_result(F, G, v, a, b, t, order)

    cheb = _chebyshev_pair(F, G)
    if cheb is not None:
        return cheb

    common = _iterate_test(F, G)
    if common is not None:
        return _common_root_result(F, G, common)

    return Classification(Verdict.FREE, field=K, notes=[
        "not linearly conjugate to a monomial pair, a Chebyshev pair, or a pair "
        "of scaled iterates of one polynomial"])


def _monomial_result(F, G, v, a, b, t, order):
    K = F.field
    m, n = F.degree, G.degree
    notes = []
    # witness: verify on the translated pair, which is conjugate to (F, G)
    shift = LinearMap(K.one, v)
    Ft, Gt = conjugate(F, shift), conjugate(G, shift)
    witness, ij = _monomial_witness(Ft, Gt, (m - 1) * order)
    u = nth_root_or_request(a.inverse(), m - 1)
    extension = None
    if isinstance(u, ExtensionRequest):
        extension = u
        E = extend(u)
        u = E.gen
        notes.append(f"normalizer needs {u.spec.var} with {extension.defining_relation}")
    L = LinearMap(u, u.spec.embed(v))
    Fn = conjugate(F.change_field(u.spec), L)
    Gn = conjugate(G.change_field(u.spec), L)
    alpha = Gn.lead
    i, j = ij
    r = j
    while r < i:
        r += j
    details = {"t": str(t), "order_t": order, "alpha": str(alpha),
               "order_alpha": root_of_unity_order(alpha), "lemma_ij": [i, j]}
    return Classification(Verdict.NOT_FREE, Case.MONOMIAL, L, (Fn, Gn), witness, extension,
                          field=K, notes=notes, commuting_r=r, details=details)


def _chebyshev_pair(F, G):
    K = F.field
    m, n = F.degree, G.degree
    dF, dG = _chebyshev_data(F), _chebyshev_data(G)
    if dF is None or dG is None or dF != dG:
        return None
    v, w = dF
    if m % 2 == 0:
        u = _chebyshev_u(F, w)
    elif n % 2 == 0:
        u = _chebyshev_u(G, w)
    else:
        u = nth_root_or_request(w, 2)
    extension, notes = None, []
    if isinstance(u, ExtensionRequest):
        extension = u
        u = extend(u).gen
        notes.append(f"normalizer needs {u.spec.var} with {extension.defining_relation}")
    E = u.spec
    L = LinearMap(u, E.embed(v))
    Fn = conjugate(F.change_field(E), L)
    Gn = conjugate(G.change_field(E), L)
    if m % 2 == 0:
        words = ("FFG", "FGF")
    elif n % 2 == 0:
        words = ("GGF", "GFG")
    else:
        words = ("FG", "GF")
    rel = relation_from_words(*words, m, n)
    ok = verify_relation(rel, F, G)
    if not ok:  # pragma: no cover - guaranteed by the Chebyshev identities
        raise AssertionError("Chebyshev witness failed to verify")
    eps = (Fn.lead, Gn.lead)
    details = {"eps": [str(e) for e in eps]}
    return Classification(Verdict.NOT_FREE, Case.CHEBYSHEV, L, (Fn, Gn),
                          Relation(rel.lhs, rel.rhs, rel.degree, True), extension,
                          field=K, notes=notes, details=details)


def _common_root_result(F, G, data):
    K = F.field
    rel = case3_relation(data["i"], data["j"], data["s"], data["ell"], data["h"])
    ok = verify_relation(rel, F, G)
    if not ok:  # pragma: no cover - follows from the scaling symmetry of iterates
        raise AssertionError("common-root witness failed to verify")
    witness = Relation(rel.lhs, rel.rhs, rel.degree, True).normalized()
    details = {"iterate_scalar": str(data["gamma"]), "iterate_scalar_order": data["ell"],
               "base_degree": data["h"], "exponents": [data["i"], data["j"]]}
    notes = []
    extension = None
    found = detect_common_root(F, G)
    if isinstance(found, ExtensionRequest):
        extension = found
        notes.append("a common root A exists only after " + found.defining_relation)
    elif found is not None:
        A, gamma, zeta, i, j = found
        details.update({"A": str(A), "gamma": str(gamma), "zeta": str(zeta), "A_exponents": [i, j]})
        notes.append("decompositions F = gamma*A^(i), G = zeta*A^(j) need not be unique; "
                     "the one with smallest deg A is reported")
    return Classification(Verdict.NOT_FREE, Case.COMMON_ROOT, data["L"], (data["Fc"], data["Gc"]),
                          witness, extension, field=K, notes=notes, details=details)


# ---------------------------------------------------------------------------
# power series


def _series_word(word: str, F: TruncatedSeries, G: TruncatedSeries) -> TruncatedSeries:
    maps = {"F": F, "G": G}
    value = maps[word[-1]]
    for letter in reversed(word[:-1]):
        value = s_compose(maps[letter], value)
    return value


def verify_relation_series(rel: Relation, F: TruncatedSeries, G: TruncatedSeries):
    """(holds, N): whether both sides agree modulo X^(N+1), N the usable precision."""
    a, b = _series_word(rel.lhs, F, G), _series_word(rel.rhs, F, G)
    if a.exact and b.exact:
        return a.to_polynomial() == b.to_polynomial(), None
    N = min(a.precision, b.precision)
    return a.congruent(b, N), N


def classify_series(F: TruncatedSeries, G: TruncatedSeries, exact_check=None) -> Classification:
    """Classify a pair of series with lowest degrees m, n >= 2.

    ``exact_check`` optionally maps a Relation to True/False using the exact
    objects the series came from; without it, exact series are checked as
    polynomials.
    """
    if F.field != G.field:
        from .errors import FieldMismatch
        raise FieldMismatch(f"{F.field} vs {G.field}")
    K = F.field
    m, n = F.lowest_degree, G.lowest_degree
    if m is None or n is None or m < 2 or n < 2:
        raise HypothesisViolation("both series need lowest degree at least 2")
    _require_char_ok(K, m, n)
    root = nth_root_or_request(F.lowest_coeff.inverse(), m - 1)
    if isinstance(root, ExtensionRequest):
        return Classification(Verdict.NEEDS_EXTENSION, extension=root, field=K, notes=[
            "the lowest coefficient of F needs an (m-1)-th root outside the field"])
    L = boettcher(F, root)
    B = s_compose(s_compose(s_invert(L), G), L)
    N = B.precision
    terms = B.visible_terms()
    if len(terms) >= 2:
        return Classification(Verdict.FREE, normalizer=L, precision_used=N, field=K, notes=[
            f"the conjugate of G has two terms, of degrees {terms[0]} and {terms[1]}"])
    beta = B.coeff(terms[0]) if terms else None
    order = root_of_unity_order(beta) if beta is not None else None
    if order is None:
        return Classification(Verdict.FREE, normalizer=L, precision_used=N, field=K, notes=[
            f"the conjugate of G looks like {beta}*X^{n} with {beta} of infinite order"])
    i, j = lemma33_params(order, m)
    rel = lemma33_relation(i, 1, j, i=i, m=m, n=n)
    canonical = (TruncatedSeries.monomial(K, 1, m, N), TruncatedSeries.monomial(K, beta, n, N))
    r = j
    while r < i:
        r += j
    if exact_check is None and F.exact and G.exact:
        Fp, Gp = F.to_polynomial(), G.to_polynomial()

        def exact_check(rel):
            return verify_relation(rel, Fp, Gp)

    if exact_check is not None:
        if exact_check(rel):
            return Classification(Verdict.NOT_FREE, Case.MONOMIAL, L, canonical,
                                  Relation(rel.lhs, rel.rhs, rel.degree, True).normalized(),
                                  precision_used=N, field=K, commuting_r=r)
        return Classification(Verdict.FREE, normalizer=L, precision_used=N, field=K, notes=[
            "the conjugate of G is a torsion monomial to the working precision, but the "
            "relation it would force fails exactly, so a further term exists"])
    holds, NN = verify_relation_series(rel, F, G)
    witness = Relation(rel.lhs, rel.rhs, rel.degree, None).normalized() if holds else None
    notes = [f"the conjugate of G agrees with {beta}*X^{n} modulo X^{N + 1}; truncated inputs "
             "cannot rule out a later term"]
    if holds:
        notes.append(f"witness holds modulo X^{NN + 1} only")
    return Classification(Verdict.INCONCLUSIVE, Case.MONOMIAL, L, canonical, witness,
                          precision_used=N, field=K, notes=notes, commuting_r=r if holds else None)


# ---------------------------------------------------------------------------
# rational maps


def _as_rational(F):
    return F if isinstance(F, RationalFunction) else RationalFunction(F)


def _rational_word(word, maps):
    value = maps[word[-1]]
    for letter in reversed(word[:-1]):
        value = maps[letter].compose(value)
    return value


def classify_rational(F, G, beta=INFINITY, precision: int = DEFAULT_PRECISION) -> Classification:
    """Classify rational maps with the common fixed point beta (a field element or INFINITY)."""
    Fr, Gr = _as_rational(F), _as_rational(G)
    SF = moebius_to_zero(Fr, beta, precision)
    SG = moebius_to_zero(Gr, beta, precision)
    if Fr.is_polynomial() and Gr.is_polynomial():
        Fp, Gp = Fr.as_polynomial(), Gr.as_polynomial()

        def exact_check(rel):
            return verify_relation(rel, Fp, Gp)
    else:
        maps = {"F": Fr, "G": Gr}

        def exact_check(rel):
            return _rational_word(rel.lhs, maps) == _rational_word(rel.rhs, maps)

    result = classify_series(SF, SG, exact_check=exact_check)
    result.details["fixed_point"] = "infinity" if beta is INFINITY or beta == INFINITY else str(beta)
    return result


def common_fixed_points(F, G) -> list:
    """Common fixed points found in the working field, plus INFINITY when fixed.

    Only candidates the field can test directly are tried: rational roots
    over Q and Q(zeta_k), every element over a finite field.
    """
    Fr, Gr = _as_rational(F), _as_rational(G)
    K = Fr.field
    out = []
    if Fr.num.degree > Fr.den.degree and Gr.num.degree > Gr.den.degree:
        out.append(INFINITY)
    P = Fr.num - Fr.den * X(K)
    if P.is_zero():
        return out
    if K.size() is not None:
        candidates = K.elements()
    else:
        candidates = [K(c) for c in _rational_root_candidates(P)]
    for c in candidates:
        try:
            if Fr.evaluate(c) == c and Gr.evaluate(c) == c and c not in out:
                out.append(c)
        except ZeroDivisionError:
            continue
    return out


def _rational_root_candidates(P: Polynomial):
    K = P.field
    coeffs = []
    for c in P.coeffs:
        if isinstance(K, Rationals):
            coeffs.append(c.rep)
        else:
            base = K.base_part(c) if hasattr(K, "base_part") else None
            if base is None:
                return []
            coeffs.append(base.rep)
    low = next(i for i, c in enumerate(coeffs) if c != 0)
    coeffs = coeffs[low:]
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    out = [Fraction(0)] if low else []
    a0, an = abs(ints[0]), abs(ints[-1])
    for p in divisors(a0):
        for q in divisors(an):
            for sgn in (1, -1):
                out.append(Fraction(sgn * p, q))
    seen, uniq = set(), []
    for x in out:
        if x not in seen:
            seen.add(x)
            uniq.append(x)
    return uniq
