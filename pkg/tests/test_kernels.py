import itertools
import random

from hopfgraphs import kernels
from hopfgraphs._canon_py import automorphism_count, canonical_perm


def rand_instance(rng, max_n=5):
    n = rng.randint(1, max_n)
    mat = [rng.randint(0, 2) for _ in range(n * n)]
    sig = [rng.randint(0, 1) for _ in range(n)]
    return n, sig, mat


def encode(n, mat, perm):
    out = []
    for k in range(n):
        out += [mat[perm[k] * n + perm[j]] for j in range(k)]
        out += [mat[perm[j] * n + perm[k]] for j in range(k)]
        out.append(mat[perm[k] * n + perm[k]])
    return out


def test_canonical_perm_matches_exhaustive_minimum():
    rng = random.Random(2)
    for _ in range(120):
        n, sig, mat = rand_instance(rng, max_n=4)
        got = canonical_perm(n, sig, mat)
        admissible = [
            p
            for p in itertools.permutations(range(n))
            if all(sig[p[i]] <= sig[p[i + 1]] for i in range(n - 1))
        ]
        best = min(encode(n, mat, p) for p in admissible)
        assert encode(n, mat, got) == best
        assert sorted(got) == list(range(n))


def test_automorphism_count_matches_bruteforce():
    rng = random.Random(6)
    for _ in range(120):
        n, sig, mat = rand_instance(rng, max_n=4)
        got = automorphism_count(n, sig, mat)
        expect = 0
        for p in itertools.permutations(range(n)):
            if any(sig[p[i]] != sig[i] for i in range(n)):
                continue
            if all(
                mat[p[i] * n + p[j]] == mat[i * n + j]
                for i in range(n)
                for j in range(n)
            ):
                expect += 1
        assert got == expect


def test_backends_agree():
    rng = random.Random(8)
    for _ in range(60):
        n, sig, mat = rand_instance(rng)
        assert kernels.canonical_perm(n, sig, mat) == canonical_perm(n, sig, mat)
        assert kernels.automorphism_count(n, sig, mat) == automorphism_count(
            n, sig, mat
        )


def test_trivial_sizes():
    assert canonical_perm(0, [], []) == ()
    assert canonical_perm(1, [0], [3]) == (0,)
    assert automorphism_count(1, [0], [0]) == 1
