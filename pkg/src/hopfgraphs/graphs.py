"""Feynman graphs and simple oriented graphs.

A Feynman graph is a plain tuple

    (n, edges, ext_in, ext_out, ordered)

with vertices 0..n-1, ``edges`` a sorted tuple of directed (u, v) pairs with
multiplicity (loops u == v allowed), and per-vertex counts of incoming and
outgoing external half-edges.  ``ordered`` marks the labeled mode: vertex
labels then carry a total order and are part of the object.  This encoding is
equivalent to the half-edge model: every internal edge stands for an (out, in)
half-edge pair, external half-edges are the unpaired ones.

A simple oriented graph is ``(n, edges, ordered)`` with loop-free, duplicate
free edges.  Basis keys of the Hopf layers are canonical forms of these
tuples: minimal relabeling in unordered mode, the identity labeling in
ordered mode.
"""

from __future__ import annotations

import itertools

from . import kernels
from .errors import ModeMismatch, VertexBudgetExceeded

MAX_CANON_VERTICES = 9

FG = tuple
SG = tuple


# ---------------------------------------------------------------- builders

def fg(n, edges=(), ext_in=None, ext_out=None, ordered=False) -> FG:
    """Build and validate a Feynman graph tuple."""
    ein = tuple(ext_in) if ext_in is not None else (0,) * n
    eout = tuple(ext_out) if ext_out is not None else (0,) * n
    es = tuple(sorted((int(u), int(v)) for u, v in edges))
    if len(ein) != n or len(eout) != n:
        raise ValueError("external half-edge vectors must have length n")
    if any(c < 0 for c in ein) or any(c < 0 for c in eout):
        raise ValueError("negative external multiplicity")
    for u, v in es:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range")
    return (n, es, ein, eout, bool(ordered))


def fg_empty(ordered=False) -> FG:
    return (0, (), (), (), bool(ordered))


def sg(n, edges=(), ordered=False) -> SG:
    es = sorted({(int(u), int(v)) for u, v in edges})
    for u, v in es:
        if u == v:
            raise ValueError("loops are not allowed in simple graphs")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range")
    return (n, tuple(es), bool(ordered))


def sg_empty(ordered=False) -> SG:
    return (0, (), bool(ordered))


def sg_to_fg(s: SG) -> FG:
    n, edges, ordered = s
    return (n, edges, (0,) * n, (0,) * n, ordered)


# ------------------------------------------------------------ canonical form

_FG_CANON: dict = {}
_SG_CANON: dict = {}


def _fg_relabel(g: FG, perm) -> FG:
    n, edges, ein, eout, ordered = g
    inv = [0] * n
    for newpos, old in enumerate(perm):
        inv[old] = newpos
    es = tuple(sorted((inv[u], inv[v]) for u, v in edges))
    return (
        n,
        es,
        tuple(ein[perm[i]] for i in range(n)),
        tuple(eout[perm[i]] for i in range(n)),
        ordered,
    )


def _rank_signatures(sigs) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def fg_canonical(g: FG) -> FG:
    """Canonical representative of the isoclass (identity in ordered mode)."""
    n = g[0]
    if n > MAX_CANON_VERTICES:
        raise VertexBudgetExceeded(f"{n} vertices exceeds the cap {MAX_CANON_VERTICES}")
    if g[4] or n <= 1:
        return g
    cached = _FG_CANON.get(g)
    if cached is not None:
        return cached
    _, edges, ein, eout, _ = g
    mat = [0] * (n * n)
    for u, v in edges:
        mat[u * n + v] += 1
    sigs = []
    for v in range(n):
        row = tuple(sorted(mat[v * n + w] for w in range(n) if w != v))
        col = tuple(sorted(mat[w * n + v] for w in range(n) if w != v))
        sigs.append((ein[v], eout[v], mat[v * n + v], row, col))
    perm = kernels.canonical_perm(n, _rank_signatures(sigs), mat)
    out = _fg_relabel(g, perm)
    _FG_CANON[g] = out
    _FG_CANON[out] = out
    return out


def sg_canonical(s: SG) -> SG:
    n, edges, ordered = s
    if n > MAX_CANON_VERTICES:
        raise VertexBudgetExceeded(f"{n} vertices exceeds the cap {MAX_CANON_VERTICES}")
    if ordered or n <= 1:
        return s
    cached = _SG_CANON.get(s)
    if cached is not None:
        return cached
    mat = [0] * (n * n)
    outdeg = [0] * n
    indeg = [0] * n
    for u, v in edges:
        mat[u * n + v] = 1
        outdeg[u] += 1
        indeg[v] += 1
    sigs = list(zip(outdeg, indeg))
    perm = kernels.canonical_perm(n, _rank_signatures(sigs), mat)
    inv = [0] * n
    for newpos, old in enumerate(perm):
        inv[old] = newpos
    es = tuple(sorted((inv[u], inv[v]) for u, v in edges))
    out = (n, es, ordered)
    _SG_CANON[s] = out
    _SG_CANON[out] = out
    return out


def fg_key_bytes(g: FG) -> bytes:
    """Opaque byte serialization of a canonical form."""
    return repr(fg_canonical(g)).encode()


_FG_AUT: dict = {}


def fg_automorphisms(g: FG) -> int:
    """Number of relabelings fixing edges and external multiplicities."""
    n, edges, ein, eout, _ = g
    if n > MAX_CANON_VERTICES:
        raise VertexBudgetExceeded(f"{n} vertices exceeds the cap {MAX_CANON_VERTICES}")
    if n <= 1:
        return 1
    cached = _FG_AUT.get(g)
    if cached is not None:
        return cached
    mat = [0] * (n * n)
    for u, v in edges:
        mat[u * n + v] += 1
    sigs = [(ein[v], eout[v]) for v in range(n)]
    count = kernels.automorphism_count(n, _rank_signatures(sigs), mat)
    _FG_AUT[g] = count
    return count


# ------------------------------------------------------------- restriction

def restrict(g: FG, subset) -> FG:
    """Induced graph on a vertex subset; severed internal edges become
    external half-edges on the kept endpoint."""
    n, edges, ein, eout, ordered = g
    sub = sorted(set(subset))
    if any(v < 0 or v >= n for v in sub):
        raise ValueError("subset not contained in the vertex set")
    idx = {v: i for i, v in enumerate(sub)}
    nein = [ein[v] for v in sub]
    neout = [eout[v] for v in sub]
    kept = []
    for u, v in edges:
        iu = idx.get(u)
        iv = idx.get(v)
        if iu is not None and iv is not None:
            kept.append((iu, iv))
        elif iu is not None:
            neout[iu] += 1
        elif iv is not None:
            nein[iv] += 1
    return (len(sub), tuple(sorted(kept)), tuple(nein), tuple(neout), ordered)


def ideals(g: FG) -> list[tuple[int, ...]]:
    """All up-closed vertex subsets: i in A and i->j forces j in A."""
    n, edges = g[0], g[1]
    outmask = [0] * n
    for u, v in edges:
        if u != v:
            outmask[u] |= 1 << v
    found = []
    for bits in range(1 << n):
        rem = bits
        ok = True
        while rem:
            v = (rem & -rem).bit_length() - 1
            if outmask[v] & ~bits:
                ok = False
                break
            rem &= rem - 1
        if ok:
            found.append(bits)
    subsets = [_bits_to_tuple(b) for b in found]
    subsets.sort(key=lambda t: (len(t), t))
    return subsets


def _bits_to_tuple(bits: int) -> tuple[int, ...]:
    out = []
    while bits:
        v = (bits & -bits).bit_length() - 1
        out.append(v)
        bits &= bits - 1
    return tuple(out)


# ------------------------------------------------------------------ gluing

def glue(g: FG, h: FG, subset, sigma) -> FG:
    """Glue h onto g along an injection sigma from subset of V(g) into V(h).

    Identified vertices absorb each other's half-edges.  With an injection
    between two disjoint graphs no edge endpoints become newly identified,
    so no internal edge is ever deleted; pre-existing loops survive.
    In ordered mode, merged classes inherit the order of their smallest
    member in the concatenated labeling (g before h).
    """
    n1, e1, ein1, eout1, o1 = g
    n2, e2, ein2, eout2, o2 = h
    if o1 != o2:
        raise ModeMismatch("cannot glue ordered with unordered")
    sigma = dict(sigma)
    sub = set(subset)
    if set(sigma) != sub:
        raise ValueError("sigma must be defined exactly on the subset")
    if any(a < 0 or a >= n1 for a in sub):
        raise ValueError("subset not contained in V(g)")
    vals = list(sigma.values())
    if len(set(vals)) != len(vals):
        raise ValueError("sigma is not injective")
    if any(b < 0 or b >= n2 for b in vals):
        raise ValueError("sigma image not contained in V(h)")

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
    ein = list(ein1) + [0] * (n - n1)
    eout = list(eout1) + [0] * (n - n1)
    for w in range(n2):
        ein[hmap[w]] += ein2[w]
        eout[hmap[w]] += eout2[w]
    edges = list(e1)
    edges.extend((hmap[u], hmap[v]) for u, v in e2)
    return (n, tuple(sorted(edges)), tuple(ein), tuple(eout), o1)


def partial_injections(m: int, k: int):
    """All pairs (A, targets) of a subset of range(m) with an injection into
    range(k); targets[i] is the image of the i-th smallest element of A."""
    for bits in range(1 << m):
        sub = _bits_to_tuple(bits)
        if len(sub) > k:
            continue
        for tgt in itertools.permutations(range(k), len(sub)):
            yield sub, tgt


# ------------------------------------------------------- vertex partitions

def set_partitions(n: int):
    """All set partitions of range(n), blocks listed by least element."""
    blocks: list[list[int]] = []

    def rec(i):
        if i == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def _block_index(part, n: int) -> list[int]:
    blk = [-1] * n
    for bi, block in enumerate(part):
        for v in block:
            if v < 0 or v >= n or blk[v] != -1:
                raise ValueError("not a partition of the vertex set")
            blk[v] = bi
    if any(b == -1 for b in blk):
        raise ValueError("partition does not cover the vertex set")
    return blk


def _blocks_weakly_connected(g: FG, part) -> bool:
    n, edges = g[0], g[1]
    blk = _block_index(part, n)
    und: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u != v and blk[u] == blk[v]:
            und[u].add(v)
            und[v].add(u)
    for block in part:
        if len(block) <= 1:
            continue
        seen = {block[0]}
        todo = [block[0]]
        while todo:
            x = todo.pop()
            for y in und[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        if len(seen) != len(block):
            return False
    return True


def _quotient_acyclic(g: FG, part) -> bool:
    n, edges = g[0], g[1]
    blk = _block_index(part, n)
    k = len(part)
    adj: list[set[int]] = [set() for _ in range(k)]
    for u, v in edges:
        if blk[u] != blk[v]:
            adj[blk[u]].add(blk[v])
    color = [0] * k
    for s in range(k):
        if color[s]:
            continue
        stack = [(s, iter(adj[s]))]
        color[s] = 1
        while stack:
            x, it = stack[-1]
            y = next(it, None)
            if y is None:
                color[x] = 2
                stack.pop()
                continue
            if color[y] == 1:
                return False
            if color[y] == 0:
                color[y] = 1
                stack.append((y, iter(adj[y])))
    return True


def compatible_equivalences(g: FG) -> list:
    """Vertex partitions with weakly connected blocks and an acyclic block
    quotient; exactly the equivalences realized by the alphabet squaring."""
    out = []
    for part in set_partitions(g[0]):
        if _blocks_weakly_connected(g, part) and _quotient_acyclic(g, part):
            out.append(part)
    return out


def restrict_eq(g: FG, part) -> FG:
    """Keep intra-block internal edges; break inter-block edges into external
    half-edges on both endpoints.  Vertex set unchanged."""
    n, edges, ein, eout, ordered = g
    blk = _block_index(part, n)
    nein = list(ein)
    neout = list(eout)
    kept = []
    for u, v in edges:
        if blk[u] == blk[v]:
            kept.append((u, v))
        else:
            neout[u] += 1
            nein[v] += 1
    return (n, tuple(sorted(kept)), tuple(nein), tuple(neout), ordered)


def quotient_eq(g: FG, part) -> FG:
    """Delete intra-block internal edges entirely (both half-edges); keep all
    external half-edges.  Vertex set unchanged."""
    n, edges, ein, eout, ordered = g
    blk = _block_index(part, n)
    kept = tuple(sorted((u, v) for u, v in edges if blk[u] != blk[v]))
    return (n, kept, ein, eout, ordered)


# ------------------------------------------------------------ miscellaneous

def has_cycle(g: FG) -> bool:
    """Directed cycle through at least two distinct vertices; loops at a
    single vertex do not count."""
    n, edges = g[0], g[1]
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u].append(v)
    color = [0] * n
    for s in range(n):
        if color[s]:
            continue
        stack = [(s, iter(adj[s]))]
        color[s] = 1
        while stack:
            x, it = stack[-1]
            y = next(it, None)
            if y is None:
                color[x] = 2
                stack.pop()
                continue
            if color[y] == 1:
                return True
            if color[y] == 0:
                color[y] = 1
                stack.append((y, iter(adj[y])))
    return False


def sg_has_cycle(s: SG) -> bool:
    return has_cycle(sg_to_fg(s))


def simplify(g: FG) -> SG:
    """Forget external half-edges, loops and edge multiplicities."""
    n, edges, _, _, ordered = g
    es = sorted({(u, v) for u, v in edges if u != v})
    return (n, tuple(es), ordered)


def connected_components(g: FG) -> list[tuple[int, ...]]:
    """Weakly connected components (internal edges only), by least vertex."""
    n, edges = g[0], g[1]
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    comps: dict[int, list[int]] = {}
    for v in range(n):
        comps.setdefault(find(v), []).append(v)
    return [tuple(comps[r]) for r in sorted(comps)]


# ------------------------------------------------------------ serialization

def fg_to_json(g: FG) -> dict:
    n, edges, ein, eout, ordered = g
    return {
        "n": n,
        "edges": [list(e) for e in edges],
        "ext_in": list(ein),
        "ext_out": list(eout),
        "ordered": ordered,
    }


def fg_from_json(data: dict) -> FG:
    return fg(
        int(data["n"]),
        data.get("edges", ()),
        data.get("ext_in"),
        data.get("ext_out"),
        data.get("ordered", False),
    )


def sg_to_json(s: SG) -> dict:
    n, edges, ordered = s
    return {"n": n, "edges": [list(e) for e in edges], "ordered": ordered}


def sg_from_json(data: dict) -> SG:
    return sg(int(data["n"]), data.get("edges", ()), data.get("ordered", False))


def fg_ascii(g: FG) -> str:
    """Deterministic one-line notation for CLI echo."""
    n, edges, ein, eout, ordered = g
    parts = [str(n)]
    if edges:
        parts.append(",".join(f"{u}->{v}" for u, v in edges))
    ins = ",".join(f"{j}:{c}" for j, c in enumerate(ein) if c)
    if ins:
        parts.append("in: " + ins)
    outs = ",".join(f"{i}:{c}" for i, c in enumerate(eout) if c)
    if outs:
        parts.append("out: " + outs)
    if ordered:
        parts.append("ordered")
    return "FG[" + "; ".join(parts) + "]"
