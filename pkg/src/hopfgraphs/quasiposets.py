"""Quasi-posets and posets.

A quasi-poset is a plain tuple ``(n, rel, ordered)``: ``rel`` holds one bit
row per element, bit j of rel[i] set iff i <= j, and the relation is
reflexive and transitive by construction.  A poset is the antisymmetric
special case.  The path-order map turns a simple oriented graph into the
quasi-poset of its reachability relation; gluing takes the transitive
closure of the union relation on the merged ground set.
"""

from __future__ import annotations

from . import kernels
from .errors import ModeMismatch, VertexBudgetExceeded
from .graphs import MAX_CANON_VERTICES, _rank_signatures, partial_injections
from .lincomb import lc_bilinear, lc_iadd, lc_iadd_term, lc_single
from .qpoly import ONE, Q, QPoly

QP = tuple

_QP_CANON: dict = {}
_PROD: dict = {}
_P_PROD: dict = {}
_DELTA: dict = {}


def clear_caches() -> None:
    for d in (_QP_CANON, _PROD, _P_PROD, _DELTA):
        d.clear()


# ---------------------------------------------------------------- building

def _closure(n: int, rows: list[int]) -> tuple[int, ...]:
    """Reflexive-transitive closure of bitmask rows, in place."""
    for i in range(n):
        rows[i] |= 1 << i
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = rows[i]
            rem = acc
            while rem:
                j = (rem & -rem).bit_length() - 1
                acc |= rows[j]
                rem &= rem - 1
            if acc != rows[i]:
                rows[i] = acc
                changed = True
    return tuple(rows)


def qp_from_pairs(n: int, pairs, ordered=False) -> QP:
    """Quasi-poset generated by i <= j for the given (i, j) pairs."""
    rows = [0] * n
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"pair ({i},{j}) out of range")
        rows[i] |= 1 << j
    return (n, _closure(n, rows), bool(ordered))


def qp_from_matrix(leq, ordered=False) -> QP:
    """Validate an explicit boolean matrix: must already be reflexive and
    transitive."""
    n = len(leq)
    rows = []
    for i in range(n):
        if len(leq[i]) != n:
            raise ValueError("relation matrix must be square")
        row = 0
        for j in range(n):
            if leq[i][j]:
                row |= 1 << j
        rows.append(row)
    if any(not (rows[i] >> i) & 1 for i in range(n)):
        raise ValueError("relation is not reflexive")
    if tuple(rows) != _closure(n, list(rows)):
        raise ValueError("relation is not transitive")
    return (n, tuple(rows), bool(ordered))


def qp_empty(ordered=False) -> QP:
    return (0, (), bool(ordered))


def qp_discrete(n: int, ordered=False) -> QP:
    return (n, tuple(1 << i for i in range(n)), bool(ordered))


def qp_chain(n: int, ordered=False) -> QP:
    return (n, tuple(((1 << n) - 1) & ~((1 << i) - 1) for i in range(n)), bool(ordered))


def qp_leq(p: QP, i: int, j: int) -> bool:
    return bool((p[1][i] >> j) & 1)


def is_poset(p: QP) -> bool:
    n, rel, _ = p
    for i in range(n):
        rem = rel[i]
        while rem:
            j = (rem & -rem).bit_length() - 1
            if j != i and (rel[j] >> i) & 1:
                return False
            rem &= rem - 1
    return True


def qp_to_matrix(p: QP) -> list[list[bool]]:
    n, rel, _ = p
    return [[bool((rel[i] >> j) & 1) for j in range(n)] for i in range(n)]


def qp_to_json(p: QP) -> dict:
    return {"n": p[0], "leq": qp_to_matrix(p), "ordered": p[2]}


def qp_from_json(data: dict) -> QP:
    return qp_from_matrix(data["leq"], data.get("ordered", False))


# ------------------------------------------------------------ canonical form

def qp_canonical(p: QP) -> QP:
    n, rel, ordered = p
    if n > MAX_CANON_VERTICES:
        raise VertexBudgetExceeded(f"{n} elements exceeds the cap {MAX_CANON_VERTICES}")
    if ordered or n <= 1:
        return p
    cached = _QP_CANON.get(p)
    if cached is not None:
        return cached
    mat = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            mat[i * n + j] = (rel[i] >> j) & 1
    up = [bin(rel[i]).count("1") for i in range(n)]
    down = [sum((rel[j] >> i) & 1 for j in range(n)) for i in range(n)]
    perm = kernels.canonical_perm(n, _rank_signatures(list(zip(up, down))), mat)
    inv = [0] * n
    for newpos, old in enumerate(perm):
        inv[old] = newpos
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if (rel[perm[i]] >> perm[j]) & 1:
                rows[i] |= 1 << j
    out = (n, tuple(rows), ordered)
    _QP_CANON[p] = out
    _QP_CANON[out] = out
    return out


# --------------------------------------------------------------- operations

def path_order(s) -> QP:
    """Quasi-poset of reachability in a simple oriented graph."""
    n, edges, ordered = s
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
    return (n, _closure(n, rows), ordered)


def qp_restrict(p: QP, subset) -> QP:
    n, rel, ordered = p
    sub = sorted(set(subset))
    if any(v < 0 or v >= n for v in sub):
        raise ValueError("subset not contained in the ground set")
    m = len(sub)
    rows = [0] * m
    for a, i in enumerate(sub):
        for b, j in enumerate(sub):
            if (rel[i] >> j) & 1:
                rows[a] |= 1 << b
    return (m, tuple(rows), ordered)


def qp_ideals(p: QP) -> list[tuple[int, ...]]:
    """Up-closed subsets: i in A and i <= j forces j in A."""
    n, rel, _ = p
    found = []
    for bits in range(1 << n):
        rem = bits
        ok = True
        while rem:
            i = (rem & -rem).bit_length() - 1
            if rel[i] & ~bits:
                ok = False
                break
            rem &= rem - 1
        if ok:
            found.append(bits)
    subsets = []
    for bits in found:
        sub = []
        while bits:
            sub.append((bits & -bits).bit_length() - 1)
            bits &= bits - 1
        subsets.append(tuple(sub))
    subsets.sort(key=lambda t: (len(t), t))
    return subsets


def qp_glue(p: QP, r: QP, subset, sigma) -> QP:
    """Quotient ground set and transitive closure of the union relation.

    In ordered mode merged classes inherit the order of their smallest
    member in the concatenated labeling, as for graph gluing.
    """
    n1, rel1, o1 = p
    n2, rel2, o2 = r
    if o1 != o2:
        raise ModeMismatch("cannot glue ordered with unordered")
    sigma = dict(sigma)
    sub = set(subset)
    if set(sigma) != sub:
        raise ValueError("sigma must be defined exactly on the subset")
    vals = list(sigma.values())
    if len(set(vals)) != len(vals):
        raise ValueError("sigma is not injective")
    if any(a < 0 or a >= n1 for a in sub) or any(b < 0 or b >= n2 for b in vals):
        raise ValueError("sigma out of range")
    matched = {hv: gv for gv, hv in sigma.items()}
    hmap = [0] * n2
    fresh = n1
    for w in range(n2):
        gv = matched.get(w)
        if gv is not None:
            hmap[w] = gv
        else:
            hmap[w] = fresh
            fresh += 1
    n = fresh
    rows = [0] * n
    for i in range(n1):
        rows[i] |= rel1[i]
    for w in range(n2):
        rem = rel2[w]
        while rem:
            x = (rem & -rem).bit_length() - 1
            rows[hmap[w]] |= 1 << hmap[x]
            rem &= rem - 1
    return (n, _closure(n, rows), o1)


# ------------------------------------------------------------- Hopf algebra

def basis_product(p, r, qcoef: QPoly = Q, posets_only=False) -> dict:
    key = (p, r, qcoef, posets_only)
    cache = _P_PROD if posets_only else _PROD
    out = cache.get(key)
    if out is not None:
        return out
    acc: dict = {}
    powers = [qcoef**k for k in range(min(p[0], r[0]) + 1)]
    for sub, tgt in partial_injections(p[0], r[0]):
        w = powers[len(sub)]
        if not w:
            continue
        glued = qp_glue(p, r, sub, dict(zip(sub, tgt)))
        if posets_only and not is_poset(glued):
            continue
        lc_iadd_term(acc, qp_canonical(glued), w)
    cache[key] = acc
    return acc


def qp_product_q(a: dict, b: dict, qcoef: QPoly = Q) -> dict:
    return lc_bilinear(lambda p, r: basis_product(p, r, qcoef), a, b)


def poset_product_q(a: dict, b: dict, qcoef: QPoly = Q) -> dict:
    """Same gluing sum, keeping only the antisymmetric results."""
    return lc_bilinear(lambda p, r: basis_product(p, r, qcoef, posets_only=True), a, b)


def unit(ordered=False) -> dict:
    return lc_single(qp_empty(ordered))


def basis_Delta(p) -> dict:
    out = _DELTA.get(p)
    if out is not None:
        return out
    verts = set(range(p[0]))
    acc: dict = {}
    for a in qp_ideals(p):
        left = qp_canonical(qp_restrict(p, verts.difference(a)))
        right = qp_canonical(qp_restrict(p, a))
        lc_iadd_term(acc, (left, right), ONE)
    _DELTA[p] = acc
    return acc


def qp_Delta(a: dict) -> dict:
    out: dict = {}
    for p, c in a.items():
        lc_iadd(out, basis_Delta(p), c)
    return out


poset_Delta = qp_Delta  # restriction of a poset is a poset


def morphism_P(a: dict) -> dict:
    """Push a simple-graph element to quasi-posets through the path order."""
    out: dict = {}
    for s, c in a.items():
        lc_iadd_term(out, qp_canonical(path_order(s)), c)
    return out


def project_posets(a: dict) -> dict:
    """Kill quasi-posets with a nontrivial mutual-comparability class."""
    return {p: c for p, c in a.items() if is_poset(p)}


def degenerate_delta(p: QP) -> dict:
    """The coproduct a totally ordered alphabet induces on posets:
    P tensor (discrete poset on n points).  Right counital only."""
    return {(qp_canonical(p), qp_discrete(p[0], p[2])): ONE}


def counit_Delta(a: dict) -> QPoly:
    out = QPoly()
    for p, c in a.items():
        if p[0] == 0:
            out = out + c
    return out


def element(p) -> dict:
    return lc_single(qp_canonical(p))
