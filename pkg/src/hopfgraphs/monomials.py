"""Generator monomials of the truncated alphabet algebras.

A monomial is a plain tuple

    (word, edges, ein, eout)

where ``word`` holds the vertex letters (sorted in the commutative algebras,
in writing order and pairwise distinct in the word algebras), ``edges`` maps
letter pairs to edge-variable exponents, and ``ein``/``eout`` hold the
exponents of the incoming and outgoing external variables, all as sorted
tuples of (key, exponent) pairs.  The degree of a monomial counts edge plus
external exponents; vertex letters are free.

Multiplication merges exponents and returns the number of vertex-letter
collisions: each collision is one application of the square relation in the
commutative case or of the drop-the-later-duplicate rule in the word case,
so the caller scales by its weight parameter to that power.
"""

from __future__ import annotations

from .errors import NotAdmissible

Monomial = tuple

MONO_ONE: Monomial = ((), (), (), ())


def mono(word=(), edges=(), ein=(), eout=(), ordered=False) -> Monomial:
    """Build a normalized monomial from iterables of (key, exponent)."""
    w = tuple(word) if ordered else tuple(sorted(word))
    if len(set(w)) != len(w):
        raise ValueError("vertex letters must be pairwise distinct")
    e = tuple(sorted((tuple(k), int(v)) for k, v in dict(edges).items() if v))
    bi = tuple(sorted((int(k), int(v)) for k, v in dict(ein).items() if v))
    bo = tuple(sorted((int(k), int(v)) for k, v in dict(eout).items() if v))
    if any(v < 0 for _, v in e + bi + bo):
        raise ValueError("negative exponent")
    return (w, e, bi, bo)


def mono_degree(m: Monomial) -> int:
    return sum(v for _, v in m[1]) + sum(v for _, v in m[2]) + sum(v for _, v in m[3])


def _merge(pairs_a, pairs_b):
    if not pairs_b:
        return pairs_a
    if not pairs_a:
        return pairs_b
    d = dict(pairs_a)
    for k, v in pairs_b:
        d[k] = d.get(k, 0) + v
    return tuple(sorted(d.items()))


def mono_mul(a: Monomial, b: Monomial, ordered=False) -> tuple[int, Monomial]:
    """Product of two monomials: (number of letter collisions, merged)."""
    wa, ea, ia, oa = a
    wb, eb, ib, ob = b
    if ordered:
        seen = set(wa)
        word = list(wa)
        hits = 0
        for x in wb:
            if x in seen:
                hits += 1
            else:
                seen.add(x)
                word.append(x)
        w = tuple(word)
    else:
        sa = set(wa)
        hits = sum(1 for x in wb if x in sa)
        w = tuple(sorted(sa.union(wb)))
    return hits, (w, _merge(ea, eb), _merge(ia, ib), _merge(oa, ob))


def mono_valid_for(m: Monomial, alph) -> bool:
    """Edge keys must respect the alphabet's quasi-order; letters in range."""
    size, ranks = alph
    for x in m[0]:
        if not 0 <= x < size:
            return False
    for (i, j), _ in m[1]:
        if not (0 <= i < size and 0 <= j < size and ranks[i] <= ranks[j]):
            return False
    for j, _ in m[2]:
        if not 0 <= j < size:
            return False
    for i, _ in m[3]:
        if not 0 <= i < size:
            return False
    return True


def is_admissible(m: Monomial) -> bool:
    """Every edge or external variable touches a present vertex letter."""
    present = set(m[0])
    for (i, j), _ in m[1]:
        if i not in present or j not in present:
            return False
    return all(j in present for j, _ in m[2]) and all(
        i in present for i, _ in m[3]
    )


def fg_of_monomial(m: Monomial, ordered=False):
    """Feynman graph of an admissible monomial.

    Vertices are the word letters, in word order (ordered mode) or sorted
    (commutative mode); exponents become edge and half-edge multiplicities.
    """
    if not is_admissible(m):
        raise NotAdmissible(f"monomial {m} has a variable at an absent vertex")
    word = m[0] if ordered else tuple(sorted(m[0]))
    idx = {x: k for k, x in enumerate(word)}
    n = len(word)
    edges = []
    for (i, j), v in m[1]:
        edges.extend([(idx[i], idx[j])] * v)
    ein = [0] * n
    for j, v in m[2]:
        ein[idx[j]] += v
    eout = [0] * n
    for i, v in m[3]:
        eout[idx[i]] += v
    return (n, tuple(sorted(edges)), tuple(ein), tuple(eout), bool(ordered))


def quot_prime(m: Monomial) -> Monomial:
    """Image in the simple-graph quotient: drop external variables and
    loop variables, cap edge exponents at one."""
    edges = tuple(sorted(((i, j), 1) for (i, j), v in m[1] if i != j and v))
    return (m[0], edges, (), ())


def quot_doubleprime(m: Monomial) -> Monomial:
    """Image in the quasi-poset quotient: additionally close the edge
    support transitively (the canonical representative of its congruence
    class)."""
    m = quot_prime(m)
    succ: dict[int, set[int]] = {}
    for (i, j), _ in m[1]:
        succ.setdefault(i, set()).add(j)
    changed = True
    while changed:
        changed = False
        for i, outs in succ.items():
            add = set()
            for j in outs:
                add |= succ.get(j, set())
            add -= outs
            add.discard(i)
            if add:
                outs |= add
                changed = True
    edges = tuple(
        sorted(((i, j), 1) for i, outs in succ.items() for j in outs if i != j)
    )
    return (m[0], edges, (), ())


def mono_str(m: Monomial) -> str:
    """Text form for CLI echo."""
    parts = []
    for x in m[0]:
        parts.append(f"x_{x}")
    for (i, j), v in m[1]:
        parts.append(f"x_{{{i},{j}}}" + (f"^{v}" if v > 1 else ""))
    for j, v in m[2]:
        parts.append(f"x_{{-inf,{j}}}" + (f"^{v}" if v > 1 else ""))
    for i, v in m[3]:
        parts.append(f"x_{{{i},inf}}" + (f"^{v}" if v > 1 else ""))
    return "1" if not parts else "*".join(parts)
