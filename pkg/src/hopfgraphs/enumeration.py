"""Exhaustive bases of the four families under size bounds.

Unordered enumerators return canonical keys (one per isoclass), sorted;
ordered enumerators return every labeled object.  Quasi-posets are built as
(set partition, labeled poset on the blocks) pairs, which hits every
preorder exactly once; labeled posets come from transitively closed subsets
of the strict upper triangle pushed around by all permutations.
"""

from __future__ import annotations

import itertools

from .graphs import fg_canonical, set_partitions, sg_canonical
from .quasiposets import is_poset, qp_canonical

_LABELED_POSETS: dict[int, tuple] = {}


def enum_fg(n: int, max_edges: int, max_ext: int = 1, ordered: bool = False):
    """All Feynman graphs with n vertices, at most max_edges internal edges
    and per-vertex external multiplicities at most max_ext."""
    if n == 0:
        return [(0, (), (), (), ordered)]
    positions = [(u, v) for u in range(n) for v in range(n)]
    ext_range = range(max_ext + 1)
    seen = set()
    out = []
    edge_choices = []
    for k in range(max_edges + 1):
        edge_choices.extend(itertools.combinations_with_replacement(positions, k))
    for edges in edge_choices:
        for ein in itertools.product(ext_range, repeat=n):
            for eout in itertools.product(ext_range, repeat=n):
                g = (n, tuple(sorted(edges)), ein, eout, ordered)
                key = g if ordered else fg_canonical(g)
                if key not in seen:
                    seen.add(key)
                    out.append(key)
    out.sort()
    return out


def enum_fg_upto(max_n: int, max_edges: int, max_ext: int = 1, ordered: bool = False):
    out = []
    for n in range(max_n + 1):
        out.extend(enum_fg(n, max_edges, max_ext, ordered))
    return out


def enum_sg(n: int, ordered: bool = False):
    """All simple oriented graphs on n vertices."""
    if n == 0:
        return [(0, (), ordered)]
    positions = [(u, v) for u in range(n) for v in range(n) if u != v]
    seen = set()
    out = []
    for k in range(len(positions) + 1):
        for edges in itertools.combinations(positions, k):
            s = (n, tuple(sorted(edges)), ordered)
            key = s if ordered else sg_canonical(s)
            if key not in seen:
                seen.add(key)
                out.append(key)
    out.sort()
    return out


def enum_sg_upto(max_n: int, ordered: bool = False):
    out = []
    for n in range(max_n + 1):
        out.extend(enum_sg(n, ordered))
    return out


def labeled_posets(n: int):
    """All partial orders on range(n), as bitmask row tuples."""
    cached = _LABELED_POSETS.get(n)
    if cached is not None:
        return cached
    if n == 0:
        _LABELED_POSETS[0] = ((),)
        return _LABELED_POSETS[0]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    base = []
    for k in range(len(pairs) + 1):
        for sub in itertools.combinations(pairs, k):
            s = set(sub)
            # chained upper-triangle pairs always have i < j < k2
            if any(
                (i, k2) not in s
                for i, j in sub
                for j2, k2 in sub
                if j == j2
            ):
                continue
            base.append(sub)
    seen = set()
    for sub in base:
        for perm in itertools.permutations(range(n)):
            rows = [1 << i for i in range(n)]
            for i, j in sub:
                rows[perm[i]] |= 1 << perm[j]
            seen.add(tuple(rows))
    result = tuple(sorted(seen))
    _LABELED_POSETS[n] = result
    return result


def enum_qp(n: int, ordered: bool = False):
    """All quasi-posets on n elements: a partition into mutual-comparability
    classes plus a partial order on the classes."""
    if n == 0:
        return [(0, (), ordered)]
    seen = set()
    out = []
    for part in set_partitions(n):
        k = len(part)
        masks = [0] * k
        for bi, block in enumerate(part):
            for v in block:
                masks[bi] |= 1 << v
        for rows in labeled_posets(k):
            rel = [0] * n
            for bi, block in enumerate(part):
                cover = 0
                rem = rows[bi]
                while rem:
                    bj = (rem & -rem).bit_length() - 1
                    cover |= masks[bj]
                    rem &= rem - 1
                for v in block:
                    rel[v] = cover
            p = (n, tuple(rel), ordered)
            key = p if ordered else qp_canonical(p)
            if key not in seen:
                seen.add(key)
                out.append(key)
    out.sort()
    return out


def enum_qp_upto(max_n: int, ordered: bool = False):
    out = []
    for n in range(max_n + 1):
        out.extend(enum_qp(n, ordered))
    return out


def enum_posets(n: int, ordered: bool = False):
    return [p for p in enum_qp(n, ordered) if is_poset(p)]


def enum_posets_upto(max_n: int, ordered: bool = False):
    out = []
    for n in range(max_n + 1):
        out.extend(enum_posets(n, ordered))
    return out
