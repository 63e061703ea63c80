"""Words over {F, G}, exact evaluation and a bounded search for relations.

A word is a string over the letters ``F`` and ``G`` read outermost first:
``"FG"`` means F o G, so G is applied first.
"""

from __future__ import annotations

import heapq
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby

from .errors import BoundTooSmall, DivisibilityUnsatisfied, FieldMismatch
from .field import Cyclotomic, Rationals, is_prime
from .poly import Polynomial, compose

LETTERS = "FG"


def check_word(w: str) -> str:
    if not w or any(c not in LETTERS for c in w):
        raise ValueError(f"not a word over F, G: {w!r}")
    return w


def word_degree(w: str, m: int, n: int) -> int:
    return m ** w.count("F") * n ** w.count("G")


def pretty_word(w: str) -> str:
    """Run-length form, e.g. ``FFGGF`` -> ``F^2 o G^2 o F``."""
    parts = []
    for letter, run in groupby(w):
        k = len(list(run))
        parts.append(letter if k == 1 else f"{letter}^{k}")
    return " o ".join(parts)


@dataclass(frozen=True)
class Relation:
    lhs: str
    rhs: str
    degree: int
    verified: bool | None = None

    def __post_init__(self):
        check_word(self.lhs)
        check_word(self.rhs)

    def normalized(self) -> Relation:
        """Same relation with the lexicographically smaller word on the left."""
        if self.rhs < self.lhs:
            return Relation(self.rhs, self.lhs, self.degree, self.verified)
        return self

    def key(self):
        r = self.normalized()
        return (r.lhs, r.rhs)

    def is_trimmed(self) -> bool:
        return self.lhs[-1] != self.rhs[-1]

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "degree": self.degree, "verified": self.verified}

    def __str__(self):
        return f"{pretty_word(self.lhs)} = {pretty_word(self.rhs)}"


def relation_from_words(lhs: str, rhs: str, m: int, n: int) -> Relation:
    dl, dr = word_degree(lhs, m, n), word_degree(rhs, m, n)
    if dl != dr:
        raise ValueError(f"{lhs} and {rhs} have different degrees {dl} and {dr}")
    return Relation(lhs, rhs, dl)


class Evaluator:
    """Exact word evaluation with a cache of already computed words."""

    def __init__(self, F: Polynomial, G: Polynomial):
        if F.field != G.field:
            raise FieldMismatch(f"{F.field} vs {G.field}")
        self.polys = {"F": F, "G": G}
        self.cache: dict[str, Polynomial] = {"F": F, "G": G}

    def __call__(self, w: str) -> Polynomial:
        check_word(w)
        cache = self.cache
        k = 0
        while w[k:] not in cache:
            k += 1
        value = cache[w[k:]]
        for idx in range(k - 1, -1, -1):
            value = compose(self.polys[w[idx]], value)
            if len(w) - idx <= 24:
                cache[w[idx:]] = value
        return value


def eval_word(w: str, F: Polynomial, G: Polynomial) -> Polynomial:
    """The composition spelled by ``w``, folded right to left."""
    check_word(w)
    polys = {"F": F, "G": G}
    value = polys[w[-1]]
    for letter in reversed(w[:-1]):
        value = compose(polys[letter], value)
    return value


def verify_relation(rel: Relation, F: Polynomial, G: Polynomial, evaluator: Evaluator | None = None) -> bool:
    if rel.lhs == rel.rhs:
        return True
    if word_degree(rel.lhs, F.degree, G.degree) != word_degree(rel.rhs, F.degree, G.degree):
        return False
    ev = evaluator or Evaluator(F, G)
    return ev(rel.lhs) == ev(rel.rhs)


# ---------------------------------------------------------------------------
# explicit relation families


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def lemma33_params(ell: int, m: int) -> tuple[int, int]:
    """Smallest (i, j) with ell dividing m^i * (m^j - 1)."""
    if ell < 1 or m < 2:
        raise ValueError("need ell >= 1 and m >= 2")
    shared, coprime = 1, ell
    g = math.gcd(coprime, m)
    while g > 1:
        shared *= g
        coprime //= g
        g = math.gcd(coprime, m)
    i = 0
    while m**i % shared:
        i += 1
    return i, multiplicative_order(m, coprime)


def lemma33_relation(r: int, s: int, j: int, i: int = 0, m: int | None = None, n: int | None = None) -> Relation:
    """F^r o G^s o F^j = F^(j+r) o G^s, valid when r >= i.

    ``i`` and ``j`` come from :func:`lemma33_params`; with m and n given the
    composed degree is filled in (otherwise it is 0).
    """
    if r < i:
        raise ValueError(f"need r >= i, got r = {r} < {i}")
    if s < 1 or j < 1:
        raise ValueError("need s >= 1 and j >= 1")
    lhs = "F" * r + "G" * s + "F" * j
    rhs = "F" * (j + r) + "G" * s
    degree = word_degree(lhs, m, n) if m and n else 0
    return Relation(lhs, rhs, degree)


def case3_divides(a: int, b: int, i: int, j: int, ell: int, r_base: int) -> bool:
    q = r_base ** (i * j)
    total = sum(q**k for k in range(b))
    return (r_base ** (i * a) * total) % ell == 0


def case3_relation(i: int, j: int, s: int, ell: int, r_base: int,
                   a: int | None = None, b: int | None = None) -> Relation:
    """F^(a+jb) = F^a o G^(ib) for F = alpha*H^(i), G = beta*H^(j), deg H = r_base.

    ``ell`` is the order of the scalar gamma with F^(j) = gamma*G^(i); it must
    divide s.  Without explicit (a, b) the smallest pair (by a+b, then a)
    with ell | r^(ia) (1 + r^(ij) + ... + r^((b-1)ij)) is used.
    """
    for name, val in (("i", i), ("j", j), ("s", s), ("ell", ell)):
        if val < 1:
            raise DivisibilityUnsatisfied(f"{name} must be positive, got {val}")
    if r_base < 2:
        raise DivisibilityUnsatisfied("the degree of H must be at least 2")
    if s % ell:
        raise DivisibilityUnsatisfied(f"ell = {ell} does not divide s = {s}")
    if a is not None or b is not None:
        if a is None or b is None or a < 1 or b < 1 or not case3_divides(a, b, i, j, ell, r_base):
            raise DivisibilityUnsatisfied(f"(a, b) = ({a}, {b}) fails the divisibility by {ell}")
    else:
        a = b = None
        limit = 2 * ell * ell + 2
        for total in range(2, limit + 2):
            for aa in range(1, total):
                if case3_divides(aa, total - aa, i, j, ell, r_base):
                    a, b = aa, total - aa
                    break
            if a is not None:
                break
        if a is None:  # pragma: no cover - a solution always exists below the limit
            raise DivisibilityUnsatisfied("no (a, b) found")
    lhs = "F" * (a + j * b)
    rhs = "F" * a + "G" * (i * b)
    return Relation(lhs, rhs, r_base ** (i * (a + j * b)))


# ---------------------------------------------------------------------------
# fingerprints


_PRIME_BASE = (1 << 61) - 1


def _primes_congruent_one(k: int, count: int, avoid) -> list[int]:
    out = []
    q = _PRIME_BASE - (_PRIME_BASE - 1) % k
    while len(out) < count:
        if is_prime(q) and q not in avoid:
            out.append(q)
        q -= k
    return out


def _primitive_root_of_order(k: int, q: int) -> int:
    factors = [p for p in range(2, k + 1) if k % p == 0 and is_prime(p)]
    for g in range(2, q):
        w = pow(g, (q - 1) // k, q)
        if all(pow(w, k // p, q) != 1 for p in factors):
            return w
    raise ValueError("no primitive root found")  # pragma: no cover


class _ModularImage:
    """F and G reduced to a prime field GF(q) through a ring map."""

    def __init__(self, F: Polynomial, G: Polynomial, q: int, rng: random.Random):
        self.q = q
        field = F.field
        if isinstance(field, Rationals):
            def reduce(rep: Fraction):
                if rep.denominator % q == 0:
                    raise ZeroDivisionError
                return rep.numerator * pow(rep.denominator, -1, q) % q
        else:
            w = _primitive_root_of_order(field.k, q)

            def reduce(rep):
                acc = 0
                for c in reversed(rep):
                    if c.denominator % q == 0:
                        raise ZeroDivisionError
                    acc = (acc * w + c.numerator * pow(c.denominator, -1, q)) % q
                return acc

        self.coeffs = {}
        for letter, P in (("F", F), ("G", G)):
            dense = [0] * (P.degree + 1)
            for e, c in P.terms():
                dense[e] = reduce(c.rep)
            self.coeffs[letter] = dense[::-1]
        self.x0 = rng.randrange(2, q - 1)

    def apply(self, letter: str, x: int) -> int:
        q = self.q
        acc = 0
        for c in self.coeffs[letter]:
            acc = (acc * x + c) % q
        return acc

    def word(self, w: str) -> int:
        x = self.x0
        for letter in reversed(w):
            x = self.apply(letter, x)
        return x


class _Hasher:
    """Word keys: modular fingerprints when the field allows, exact keys otherwise."""

    def __init__(self, F: Polynomial, G: Polynomial, evaluator: Evaluator, seed: int = 0x5eed):
        self.evaluator = evaluator
        field = F.field
        self.images = None
        if isinstance(field, (Rationals, Cyclotomic)):
            k = field.k if isinstance(field, Cyclotomic) else 2
            rng = random.Random(seed)
            images, avoid = [], set()
            while len(images) < 2:
                q = _primes_congruent_one(k, 1, avoid)[0]
                avoid.add(q)
                try:
                    images.append(_ModularImage(F, G, q, rng))
                except ZeroDivisionError:
                    continue
            self.images = images
        self.exact = self.images is None

    def extend(self, letter: str, key_of_rest, w: str):
        """Key of ``letter + rest`` given the key of ``rest``."""
        if self.exact:
            return self.evaluator(w).key()
        return tuple(img.apply(letter, x) for img, x in zip(self.images, key_of_rest))

    def base(self, letter: str):
        if self.exact:
            return self.evaluator(letter).key()
        return tuple(img.apply(letter, img.x0) for img in self.images)

    def key(self, w: str):
        if self.exact:
            return self.evaluator(w).key()
        return tuple(img.word(w) for img in self.images)


# ---------------------------------------------------------------------------
# search


def _trim_candidates(u: str, w: str, hasher: _Hasher) -> list[tuple[str, str]]:
    """Right-trim u = w, then left-trim while fingerprints agree; most trimmed first."""
    k = 0
    while k < min(len(u), len(w)) - 1 and u[-1 - k] == w[-1 - k]:
        k += 1
    u, w = u[: len(u) - k], w[: len(w) - k]
    chain = [(u, w)]
    while len(u) > 1 and len(w) > 1 and u[0] == w[0]:
        u2, w2 = u[1:], w[1:]
        if hasher.key(u2) != hasher.key(w2):
            break
        u, w = u2, w2
        chain.append((u, w))
    return chain[::-1]


_worker_state: dict = {}


def _worker_init(F, G):
    _worker_state["ev"] = Evaluator(F, G)


def _verify_chain(chain):
    ev = _worker_state["ev"]
    for u, w in chain:
        if ev(u) == ev(w):
            return (u, w)
    return None


def search_relations(F: Polynomial, G: Polynomial, degree_bound: int, *,
                     max_relations: int | None = None, jobs: int = 1) -> list[Relation]:
    """All trimmed relations met by enumerating words of composed degree <= bound.

    Words are visited in increasing degree.  Each word's key (a pair of
    modular fingerprints over Q and Q(zeta_k), the exact polynomial
    otherwise) is looked up in a table of earlier words; a hit is
    right-trimmed, left-trimmed while the fingerprints still agree, and
    verified exactly before it is reported.  With ``max_relations`` the
    search stops after the degree layer in which that many were found.
    """
    if F.field != G.field:
        raise FieldMismatch(f"{F.field} vs {G.field}")
    m, n = F.degree, G.degree
    if m < 2 or n < 2:
        raise ValueError("both polynomials need degree at least 2")
    if degree_bound < m * n:
        raise BoundTooSmall(f"bound {degree_bound} is below deg F * deg G = {m * n}")
    evaluator = Evaluator(F, G)
    hasher = _Hasher(F, G, evaluator)
    _worker_state["ev"] = evaluator
    deg = {"F": m, "G": n}

    table: dict = {}
    keys: dict[str, object] = {}
    known: dict[tuple[str, str], Relation] = {}
    heap = [(m, "F"), (n, "G")]
    heapq.heapify(heap)

    pool = ProcessPoolExecutor(jobs, initializer=_worker_init, initargs=(F, G)) if jobs > 1 else None
    try:
        while heap:
            layer_degree = heap[0][0]
            layer = []
            while heap and heap[0][0] == layer_degree:
                layer.append(heapq.heappop(heap)[1])
            pending = []  # (word, witness list, chain)
            for w in layer:
                rest = w[1:]
                key = hasher.base(w) if not rest else hasher.extend(w[0], keys[rest], w)
                keys[w] = key
                for letter in LETTERS:
                    d = layer_degree * deg[letter]
                    if d <= degree_bound:
                        heapq.heappush(heap, (d, letter + w))
                slot = table.setdefault((layer_degree, key), [])
                if not slot:
                    slot.append(w)
                    continue
                chain = [c for u in slot for c in _trim_candidates(u, w, hasher)]
                pending.append((w, slot, chain))
            if not pending:
                continue
            todo = []
            results = [None] * len(pending)
            for idx, (_, _, chain) in enumerate(pending):
                hit = next((c for c in chain if tuple(sorted(c)) in known), None)
                if hit is not None:
                    results[idx] = hit
                elif hasher.exact:
                    # exact keys: the untrimmed pair is a genuine equality
                    results[idx] = _first_exact(chain, evaluator)
                else:
                    todo.append(idx)
            chains = [pending[idx][2] for idx in todo]
            if pool is not None and chains:
                verified = list(pool.map(_verify_chain, chains, chunksize=max(1, len(chains) // (4 * jobs))))
            else:
                verified = [_verify_chain(c) for c in chains]
            for idx, res in zip(todo, verified):
                results[idx] = res
            for (w, slot, _), res in zip(pending, results):
                if res is None:
                    slot.append(w)  # fingerprint clash without an equality
                    continue
                a, b = sorted(res)
                if (a, b) not in known:
                    known[(a, b)] = Relation(a, b, word_degree(a, m, n), True)
            if max_relations is not None and len(known) >= max_relations:
                break
    finally:
        if pool is not None:
            pool.shutdown()
    out = sorted(known.values(), key=lambda r: (r.degree, r.lhs, r.rhs))
    if max_relations is not None:
        out = out[:max_relations]
    return out


def _first_exact(chain, evaluator):
    for u, w in chain:
        if evaluator(u) == evaluator(w):
            return (u, w)
    return None  # pragma: no cover - the untrimmed pair always holds in exact mode
