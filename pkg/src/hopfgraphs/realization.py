"""Truncated alphabet algebras and the realization oracle.

Elements here are exact polynomial truncations: finitely many monomials with
rational coefficients, a fixed alphabet, a rational weight parameter for the
vertex-square relation, a degree cap, and a flavor selecting the quotient
("full" keeps everything, "prime" caps edge exponents and kills loop and
external variables, "doubleprime" additionally closes edge supports
transitively).

The realization of a graph, simple graph or quasi-poset is the sum of all
its admissible monomials over the alphabet.  Doubling splits a union
alphabet into two tensor legs; squaring splits a product alphabet, letter
collisions on the legs paying one factor of the leg weight each.  The word
(ordered) realizations satisfy the product/coproduct intertwining laws on
the nose; the commutative ones only up to automorphism factors, which the
oracle helpers expose rather than hide.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    DroppedTermError,
    InconclusiveOracle,
    ModeMismatch,
    QFactorizationMismatch,
    UnsupportedOperation,
)
from .monomials import (
    MONO_ONE,
    Monomial,
    mono_degree,
    mono_mul,
    quot_doubleprime,
    quot_prime,
)

FLAVORS = ("full", "prime", "doubleprime")

_REALIZE: dict = {}


def clear_caches() -> None:
    _REALIZE.clear()


def _normalize(m: Monomial, flavor: str) -> Monomial:
    if flavor == "prime":
        return quot_prime(m)
    if flavor == "doubleprime":
        return quot_doubleprime(m)
    return m


def mono_product(a: Monomial, b: Monomial, q: Fraction, ordered: bool, flavor: str):
    """(coefficient, normalized monomial) for one monomial product."""
    hits, merged = mono_mul(a, b, ordered)
    if hits and not q:
        return Fraction(0), merged
    return q**hits, _normalize(merged, flavor)


class AlgElement:
    """Finite span of monomials in a truncated alphabet algebra."""

    __slots__ = ("terms", "alphabet", "q", "ordered", "cap", "flavor")

    def __init__(self, alphabet, q, terms=None, ordered=False, cap=None, flavor="full"):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        self.alphabet = alphabet
        self.q = Fraction(q)
        self.ordered = bool(ordered)
        self.cap = cap
        self.flavor = flavor
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    if cap is not None and mono_degree(m) > cap:
                        raise DroppedTermError(f"monomial above degree cap {cap}")
                    self.terms[m] = c

    def _context(self):
        return (self.alphabet, self.q, self.ordered, self.flavor)

    def _like(self, terms, cap=None):
        out = AlgElement(self.alphabet, self.q, None, self.ordered,
                         self.cap if cap is None else cap, self.flavor)
        out.terms = terms
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgElement)
            and self._context() == other._context()
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("AlgElement is not hashable")

    def _join_cap(self, other):
        if self.cap is None or other.cap is None:
            return None
        return max(self.cap, other.cap)

    def __add__(self, other: "AlgElement") -> "AlgElement":
        if self._context() != other._context():
            raise ModeMismatch("algebra contexts differ")
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return self._like(terms, self._join_cap(other))

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        return self + other.scale(-1)

    def scale(self, r) -> "AlgElement":
        r = Fraction(r)
        if not r:
            return self._like({})
        return self._like({m: c * r for m, c in self.terms.items()})

    def mul(self, other: "AlgElement", truncate=False) -> "AlgElement":
        """Product in the truncated algebra: terms beyond the truncation
        degree raise DroppedTermError unless truncate is set."""
        if self._context() != other._context():
            raise ModeMismatch("algebra contexts differ")
        cap = self._join_cap(other)
        terms: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                w, m = mono_product(ma, mb, self.q, self.ordered, self.flavor)
                if not w:
                    continue
                if cap is not None and mono_degree(m) > cap:
                    if truncate:
                        continue
                    raise DroppedTermError(
                        f"product monomial exceeds the degree cap {cap}"
                    )
                s = terms.get(m, 0) + ca * cb * w
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return self._like(terms, cap)

    def __mul__(self, other: "AlgElement") -> "AlgElement":
        return self.mul(other, truncate=False)

    def __repr__(self):
        return f"AlgElement({len(self.terms)} terms, q={self.q}, {self.flavor})"


# -------------------------------------------------------------- realization

def _edge_multiplicities(edges):
    d: dict = {}
    for e in edges:
        d[e] = d.get(e, 0) + 1
    return d


def _enum_fg_monomials(g, alph) -> tuple:
    """All admissible monomials whose graph matches g over the alphabet."""
    cached = _REALIZE.get(("fg", g, alph))
    if cached is not None:
        return cached
    n, edges, ein, eout, ordered = g
    size, ranks = alph
    out = set()
    if n <= size:
        emult = _edge_multiplicities(edges)
        ein_pairs = [(j, v) for j, v in enumerate(ein) if v]
        eout_pairs = [(i, v) for i, v in enumerate(eout) if v]
        for tau in itertools.permutations(range(size), n):
            ok = True
            for u, v in emult:
                if ranks[tau[u]] > ranks[tau[v]]:
                    ok = False
                    break
            if not ok:
                continue
            word = tau if ordered else tuple(sorted(tau))
            medges: dict = {}
            for (u, v), mult in emult.items():
                key = (tau[u], tau[v])
                medges[key] = medges.get(key, 0) + mult
            m = (
                word,
                tuple(sorted(medges.items())),
                tuple(sorted((tau[j], v) for j, v in ein_pairs)),
                tuple(sorted((tau[i], v) for i, v in eout_pairs)),
            )
            out.add(m)
    result = tuple(sorted(out))
    _REALIZE[("fg", g, alph)] = result
    return result


def _enum_edge_monomials(kind, key, pairs, alph) -> tuple:
    """Shared enumeration for simple graphs (edge pairs) and quasi-posets
    (strict relation pairs): exponent-one edge variables, no externals."""
    cached = _REALIZE.get((kind, key, alph))
    if cached is not None:
        return cached
    n, ordered = key[0], key[-1]
    size, ranks = alph
    out = set()
    if n <= size:
        for tau in itertools.permutations(range(size), n):
            ok = True
            for u, v in pairs:
                if ranks[tau[u]] > ranks[tau[v]]:
                    ok = False
                    break
            if not ok:
                continue
            word = tau if ordered else tuple(sorted(tau))
            medges = tuple(sorted(((tau[u], tau[v]), 1) for u, v in pairs))
            out.add((word, medges, (), ()))
    result = tuple(sorted(out))
    _REALIZE[(kind, key, alph)] = result
    return result


def realize_fg(g, alph, q=0, cap=None) -> AlgElement:
    """Sum of all admissible monomials realizing the graph g."""
    monos = _enum_fg_monomials(g, alph)
    if cap is None:
        cap = sum(g[2]) + sum(g[3]) + len(g[1])
    elt = AlgElement(alph, q, None, g[4], cap, "full")
    elt.terms = {m: Fraction(1) for m in monos}
    return elt


def realize_sg(s, alph, q=0) -> AlgElement:
    monos = _enum_edge_monomials("sg", s, s[1], alph)
    elt = AlgElement(alph, q, None, s[2], len(s[1]), "prime")
    elt.terms = {m: Fraction(1) for m in monos}
    return elt


def realize_qp(p, alph, q=0) -> AlgElement:
    n, rel, ordered = p
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and (rel[i] >> j) & 1
    ]
    monos = _enum_edge_monomials("qp", p, pairs, alph)
    elt = AlgElement(alph, q, None, ordered, len(pairs), "doubleprime")
    elt.terms = {m: Fraction(1) for m in monos}
    return elt


def quotient_prime(elt: AlgElement) -> AlgElement:
    """Push an element of the full algebra to the simple-graph quotient."""
    terms: dict = {}
    for m, c in elt.terms.items():
        k = quot_prime(m)
        s = terms.get(k, 0) + c
        if s:
            terms[k] = s
        else:
            del terms[k]
    out = AlgElement(elt.alphabet, elt.q, None, elt.ordered, elt.cap, "prime")
    out.terms = terms
    return out


def quotient_doubleprime(elt: AlgElement) -> AlgElement:
    """Push further to the quasi-poset quotient (transitive closure form)."""
    terms: dict = {}
    for m, c in elt.terms.items():
        k = quot_doubleprime(m)
        s = terms.get(k, 0) + c
        if s:
            terms[k] = s
        else:
            del terms[k]
    out = AlgElement(elt.alphabet, elt.q, None, elt.ordered, elt.cap, "doubleprime")
    out.terms = terms
    return out


# ------------------------------------------------------- doubling (union)

def _split_word(word, mx):
    left, right = [], []
    for x in word:
        if x < mx:
            left.append(x)
        else:
            right.append(x - mx)
    return left, right


def doubling(elt: AlgElement, mx: int) -> dict:
    """Split every monomial over the union alphabet into a tensor pair.

    Letters below mx go left, the rest right (reindexed); an edge variable
    across the split becomes an outgoing external on the left and an
    incoming external on the right (and vanishes in the prime and
    doubleprime quotients).  Returns {(left, right): coefficient}.
    """
    full = elt.flavor == "full"
    out: dict = {}
    for m, c in elt.terms.items():
        lw, rw = _split_word(m[0], mx)
        le: dict = {}
        re_: dict = {}
        lo: dict = {}
        ri: dict = {}
        for (i, j), v in m[1]:
            if i < mx and j < mx:
                le[(i, j)] = le.get((i, j), 0) + v
            elif i >= mx and j >= mx:
                k = (i - mx, j - mx)
                re_[k] = re_.get(k, 0) + v
            elif i < mx <= j:
                if full:
                    lo[i] = lo.get(i, 0) + v
                    ri[j - mx] = ri.get(j - mx, 0) + v
            else:
                raise ValueError("edge variable descends across the union split")
        li: dict = {}
        ro: dict = {}
        for j, v in m[2]:
            if j < mx:
                li[j] = li.get(j, 0) + v
            else:
                ri[j - mx] = ri.get(j - mx, 0) + v
        for i, v in m[3]:
            if i < mx:
                lo[i] = lo.get(i, 0) + v
            else:
                ro[i - mx] = ro.get(i - mx, 0) + v
        left = (
            tuple(lw),
            tuple(sorted(le.items())),
            tuple(sorted(li.items())),
            tuple(sorted(lo.items())),
        )
        right = (
            tuple(rw),
            tuple(sorted(re_.items())),
            tuple(sorted(ri.items())),
            tuple(sorted(ro.items())),
        )
        key = (left, right)
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            del out[key]
    return out


# ------------------------------------------------------ squaring (product)

def _word_collapse(seq, ordered):
    """Word with duplicates removed and the number of collisions."""
    if ordered:
        seen = set()
        word = []
        hits = 0
        for x in seq:
            if x in seen:
                hits += 1
            else:
                seen.add(x)
                word.append(x)
        return tuple(word), hits
    distinct = sorted(set(seq))
    return tuple(distinct), len(seq) - len(distinct)


def squaring(elt: AlgElement, mx: int, my: int, q1, q2) -> dict:
    """Split every monomial over the product alphabet (letters i*my + j).

    Pair letters map to one letter per leg; leg-level letter collisions pay
    one factor of that leg's weight each.  Edge variables route by the first
    components: strictly increasing first components keep an edge on the
    left (plus external dressing on the right in the full algebra),
    equivalent first components put an edge on the right.
    """
    q1 = Fraction(q1)
    q2 = Fraction(q2)
    if elt.q != q1 * q2:
        raise QFactorizationMismatch(f"need q = q1*q2, got {elt.q} != {q1}*{q2}")
    if elt.flavor == "doubleprime":
        raise UnsupportedOperation(
            "no squaring morphism on the quasi-poset quotient"
        )
    full = elt.flavor == "full"
    # lexicographic ranks: comparing ranks[i1 * my] with ranks[i2 * my]
    # compares the first components alone
    size, ranks = elt.alphabet
    if size != mx * my:
        raise ValueError("alphabet size is not the product of the leg sizes")
    out: dict = {}
    for m, c in elt.terms.items():
        lseq = [x // my for x in m[0]]
        rseq = [x % my for x in m[0]]
        lword, lhits = _word_collapse(lseq, elt.ordered)
        rword, rhits = _word_collapse(rseq, elt.ordered)
        w = (q1**lhits) * (q2**rhits) if (lhits or rhits) else Fraction(1)
        if not w:
            continue
        le: dict = {}
        re_: dict = {}
        ri: dict = {}
        ro: dict = {}
        li: dict = {}
        lo: dict = {}
        for (a, b), v in m[1]:
            i1, j1 = a // my, a % my
            i2, j2 = b // my, b % my
            if ranks[i1 * my] < ranks[i2 * my]:
                le[(i1, i2)] = le.get((i1, i2), 0) + v
                if full:
                    ro[j1] = ro.get(j1, 0) + v
                    ri[j2] = ri.get(j2, 0) + v
            else:
                re_[(j1, j2)] = re_.get((j1, j2), 0) + v
        for b, v in m[2]:
            li[b // my] = li.get(b // my, 0) + v
            ri[b % my] = ri.get(b % my, 0) + v
        for a, v in m[3]:
            lo[a // my] = lo.get(a // my, 0) + v
            ro[a % my] = ro.get(a % my, 0) + v
        left = (
            lword,
            tuple(sorted(le.items())),
            tuple(sorted(li.items())),
            tuple(sorted(lo.items())),
        )
        right = (
            rword,
            tuple(sorted(re_.items())),
            tuple(sorted(ri.items())),
            tuple(sorted(ro.items())),
        )
        if not full:
            left = quot_prime(left)
            right = quot_prime(right)
        key = (left, right)
        s = out.get(key, 0) + c * w
        if s:
            out[key] = s
        else:
            del out[key]
    return out
