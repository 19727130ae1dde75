"""Graded-dual structure on posets.

The pairing <P, Q> = (automorphisms of P) [P iso Q] identifies the span of
posets with its graded dual; the component coproduct is dual to the disjoint
union, and the product dual to the ideal coproduct sums glued posets over
systems of edges.  All counting here is by explicit enumeration so the
duality theorems can be tested against independent tallies.
"""

from __future__ import annotations

import itertools

from . import kernels
from .errors import VertexBudgetExceeded
from .lincomb import lc_iadd, lc_iadd_term, lc_single
from .qpoly import ONE, ZERO, QPoly
from .quasiposets import (
    QP,
    basis_Delta,
    is_poset,
    qp_canonical,
    qp_empty,
    qp_leq,
    qp_restrict,
)

MAX_AUT_SIZE = 8


def automorphism_count(p: QP) -> int:
    """Number of order-preserving bijections with order-preserving inverse."""
    n, rel, _ = p
    if n > MAX_AUT_SIZE:
        raise VertexBudgetExceeded(f"{n} elements exceeds the cap {MAX_AUT_SIZE}")
    if n <= 1:
        return 1
    mat = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            mat[i * n + j] = (rel[i] >> j) & 1
    up = [bin(rel[i]).count("1") for i in range(n)]
    down = [sum((rel[j] >> i) & 1 for j in range(n)) for i in range(n)]
    sig = [(up[i], down[i]) for i in range(n)]
    ranks = {s: k for k, s in enumerate(sorted(set(sig)))}
    return kernels.automorphism_count(n, [ranks[s] for s in sig], mat)


def iso_count(p: QP, r: QP) -> int:
    """Number of isomorphisms from p onto r, by direct search."""
    n = p[0]
    if r[0] != n:
        return 0
    if n == 0:
        return 1
    relp, relr = p[1], r[1]
    img = [0] * n
    used = [False] * n
    count = 0

    def dfs(i):
        nonlocal count
        if i == n:
            count += 1
            return
        for v in range(n):
            if used[v]:
                continue
            ok = True
            for j in range(i):
                if ((relp[i] >> j) & 1) != ((relr[v] >> img[j]) & 1) or (
                    (relp[j] >> i) & 1
                ) != ((relr[img[j]] >> v) & 1):
                    ok = False
                    break
            if ok:
                img[i] = v
                used[v] = True
                dfs(i + 1)
                used[v] = False

    dfs(0)
    return count


def pairing(a: dict, b: dict) -> QPoly:
    """Bilinear extension of s_P [P = Q] on canonical keys."""
    out = ZERO
    for k, c in a.items():
        cb = b.get(k)
        if cb is not None:
            out = out + (c * cb).scale(automorphism_count(k))
    return out


# ------------------------------------------------------ component coproduct

def poset_components(p: QP) -> list[tuple[int, ...]]:
    """Connected components of the comparability graph, by least element."""
    n, rel, _ = p
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if ((rel[i] >> j) & 1) or ((rel[j] >> i) & 1):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    comps: dict[int, list[int]] = {}
    for v in range(n):
        comps.setdefault(find(v), []).append(v)
    return [tuple(comps[r]) for r in sorted(comps)]


def blacktriangle(p: QP) -> dict:
    """Split the multiset of connected components in all 2^k ways."""
    comps = poset_components(p)
    k = len(comps)
    verts = list(range(p[0]))
    acc: dict = {}
    for bits in range(1 << k):
        inside = [v for i in range(k) if (bits >> i) & 1 for v in comps[i]]
        outside = [v for i in range(k) if not (bits >> i) & 1 for v in comps[i]]
        left = qp_canonical(qp_restrict(p, inside))
        right = qp_canonical(qp_restrict(p, outside))
        lc_iadd_term(acc, (left, right), ONE)
    if p[0] == 0:
        return {(qp_empty(p[2]), qp_empty(p[2])): ONE}
    return acc


def blacktriangle_element(a: dict) -> dict:
    out: dict = {}
    for p, c in a.items():
        lc_iadd(out, blacktriangle(p), c)
    return out


# --------------------------------------------------------- systems of edges

def antichains(p: QP) -> list[tuple[int, ...]]:
    n, rel, _ = p
    out = []
    for bits in range(1 << n):
        sub = []
        rem = bits
        while rem:
            sub.append((rem & -rem).bit_length() - 1)
            rem &= rem - 1
        ok = True
        for a, b in itertools.combinations(sub, 2):
            if qp_leq(p, a, b) or qp_leq(p, b, a):
                ok = False
                break
        if ok:
            out.append(tuple(sub))
    out.sort(key=lambda t: (len(t), t))
    return out


def edge_systems(p: QP, r: QP):
    """All maps from elements of p to antichains of r such that a strictly
    smaller source never receives a target above one of a larger source."""
    n = p[0]
    choices = antichains(r)
    strict_pairs = [
        (x, y)
        for x in range(n)
        for y in range(n)
        if x != y and qp_leq(p, x, y) and not qp_leq(p, y, x)
    ]
    out = []
    for theta in itertools.product(choices, repeat=n):
        ok = True
        for x, y in strict_pairs:
            for xp in theta[x]:
                for yp in theta[y]:
                    if qp_leq(r, yp, xp):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(theta)
    return out


def glue_theta(p: QP, r: QP, theta) -> QP:
    """Poset on the disjoint union: below within p, above within r, and
    p-element x below r-element y iff some x' >= x sends an edge below y."""
    np_, relp, op_ = p
    nr, relr, _ = r
    n = np_ + nr
    rows = [0] * n
    for i in range(np_):
        rows[i] = relp[i]
    for i in range(nr):
        rows[np_ + i] = relr[i] << np_
    for x in range(np_):
        for y in range(nr):
            hit = False
            for xp in range(np_):
                if not qp_leq(p, x, xp):
                    continue
                for yp in theta[xp]:
                    if qp_leq(r, yp, y):
                        hit = True
                        break
                if hit:
                    break
            if hit:
                rows[x] |= 1 << (np_ + y)
    out = (n, tuple(rows), op_)
    return out


def star(a: dict, b: dict) -> dict:
    """Dual product: sum of glued posets over all systems of edges, with
    multiplicity (distinct systems contributing isomorphic posets add up)."""
    out: dict = {}
    for p, cp in a.items():
        for r, cr in b.items():
            c = cp * cr
            for theta in edge_systems(p, r):
                lc_iadd_term(out, qp_canonical(glue_theta(p, r, theta)), c)
    return out


def hasse_edges(p: QP) -> list[tuple[int, int]]:
    """Cover relations: i < j with nothing strictly between."""
    n = p[0]
    out = []
    for i in range(n):
        for j in range(n):
            if i == j or not qp_leq(p, i, j):
                continue
            if any(
                k != i and k != j and qp_leq(p, i, k) and qp_leq(p, k, j)
                for k in range(n)
            ):
                continue
            out.append((i, j))
    return out


# -------------------------------------------------------- duality counting

def count_C_and_D(p1: QP, p2: QP, p: QP) -> tuple[int, int]:
    """Tally both sides of the splitting/gluing bijection.

    C counts triples (ideal I, iso onto the restriction to the complement,
    iso onto the restriction to I); D counts pairs (system of edges, iso of
    the glued poset onto p).  Returned separately for equality testing.
    """
    from .quasiposets import qp_ideals

    n = p[0]
    c_count = 0
    if p1[0] + p2[0] == n:
        verts = set(range(n))
        for ideal in qp_ideals(p):
            left = qp_restrict(p, verts.difference(ideal))
            right = qp_restrict(p, ideal)
            c_count += iso_count(p1, left) * iso_count(p2, right)
    d_count = 0
    for theta in edge_systems(p1, p2):
        d_count += iso_count(glue_theta(p1, p2, theta), p)
    return c_count, d_count


def hasse_to_json(p: QP) -> dict:
    return {"n": p[0], "hasse": [list(e) for e in hasse_edges(p)]}
