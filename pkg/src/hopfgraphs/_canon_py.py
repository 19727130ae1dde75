"""Pure-Python relabeling kernel: canonical permutation and automorphisms.

Objects are presented to the kernel as an n x n integer matrix (flat,
row-major) plus a per-vertex signature rank.  A permutation p (p[pos] is the
original vertex placed at pos) is admissible when the signature ranks along p
are nondecreasing; the kernel returns the admissible p minimizing the
"growing submatrix" word

    for k = 0..n-1:  m[p_k][p_0..p_k-1], m[p_0..p_k-1][p_k], m[p_k][p_k]

by branch and bound.  Signature ranks must be computed from label-invariant
data by the caller; the minimum is then a canonical form.
"""

from __future__ import annotations


def canonical_perm(n: int, sig, mat) -> tuple:
    if n <= 1:
        return tuple(range(n))

    order = sorted(range(n), key=lambda v: (sig[v], v))
    pos_rank = [sig[v] for v in order]
    # vertices grouped by rank, candidates for each position come from the
    # group owning that position
    group_of: dict[int, list[int]] = {}
    for v in order:
        group_of.setdefault(sig[v], []).append(v)

    best: list[int] = []
    cur = [0] * n
    used = [False] * n
    pbest = [0] * n

    def dfs(k: int) -> None:
        if k == n:
            pbest[:] = cur
            return
        off = k * k
        seglen = 2 * k + 1
        for v in group_of[pos_rank[k]]:
            if used[v]:
                continue
            seg = [mat[v * n + cur[j]] for j in range(k)]
            seg += [mat[cur[j] * n + v] for j in range(k)]
            seg.append(mat[v * n + v])
            if len(best) > off:
                chunk = best[off : off + seglen]
                if seg > chunk:
                    continue
                if seg < chunk:
                    del best[off:]
                    best.extend(seg)
            else:
                best.extend(seg)
            used[v] = True
            cur[k] = v
            dfs(k + 1)
            used[v] = False
        return

    dfs(0)
    return tuple(pbest)


def automorphism_count(n: int, sig, mat) -> int:
    """Count bijections preserving both the signature and the matrix."""
    if n <= 1:
        return 1
    byrank: dict[int, list[int]] = {}
    for v in range(n):
        byrank.setdefault(sig[v], []).append(v)
    img = [0] * n
    used = [False] * n
    count = 0

    def dfs(i: int) -> None:
        nonlocal count
        if i == n:
            count += 1
            return
        for v in byrank.get(sig[i], ()):
            if used[v]:
                continue
            if mat[v * n + v] != mat[i * n + i]:
                continue
            ok = True
            for j in range(i):
                if (
                    mat[v * n + img[j]] != mat[i * n + j]
                    or mat[img[j] * n + v] != mat[j * n + i]
                ):
                    ok = False
                    break
            if ok:
                img[i] = v
                used[v] = True
                dfs(i + 1)
                used[v] = False

    dfs(0)
    return count
