"""Finite totally quasi-ordered alphabets.

An alphabet is ``(m, ranks)``: letters 0..m-1 and a dense rank vector
(values 0..k-1, every value hit), with i <= j iff ranks[i] <= ranks[j] and
i ~ j iff equal ranks.  An alphabet is ordered when ranks is injective.

Disjoint union puts the second alphabet's ranks above the first; the product
takes letters (i, j), encoded as i * m_y + j, with rank lexicographic in
(rank_x, rank_y).  Both constructions return dense rank vectors on the nose,
so the associativity and distributivity laws are plain tuple equalities.
"""

from __future__ import annotations

Alphabet = tuple


def alphabet(ranks) -> Alphabet:
    """Normalize an arbitrary rank vector to dense ranks."""
    ranks = list(ranks)
    order = {r: i for i, r in enumerate(sorted(set(ranks)))}
    return (len(ranks), tuple(order[r] for r in ranks))


def alph_all_equal(m: int) -> Alphabet:
    return (m, (0,) * m)


def alph_ordered(m: int) -> Alphabet:
    return (m, tuple(range(m)))


def alph_size(x: Alphabet) -> int:
    return x[0]


def num_ranks(x: Alphabet) -> int:
    return max(x[1]) + 1 if x[0] else 0


def is_ordered(x: Alphabet) -> bool:
    return len(set(x[1])) == x[0]


def leq(x: Alphabet, i: int, j: int) -> bool:
    return x[1][i] <= x[1][j]


def equiv(x: Alphabet, i: int, j: int) -> bool:
    return x[1][i] == x[1][j]


def strictly_less(x: Alphabet, i: int, j: int) -> bool:
    return x[1][i] < x[1][j]


def alph_union(x: Alphabet, y: Alphabet) -> Alphabet:
    """Letters of x keep their ranks, letters of y are shifted above."""
    mx, rx = x
    my, ry = y
    shift = num_ranks(x)
    return (mx + my, rx + tuple(r + shift for r in ry))


def alph_product(x: Alphabet, y: Alphabet) -> Alphabet:
    """Letters (i, j) encoded i * m_y + j; lexicographic rank pairs."""
    mx, rx = x
    my, ry = y
    ky = num_ranks(y)
    ranks = [0] * (mx * my)
    for i in range(mx):
        base = rx[i] * ky
        for j in range(my):
            ranks[i * my + j] = base + ry[j]
    return (mx * my, tuple(ranks))


def alph_to_json(x: Alphabet) -> dict:
    return {"m": x[0], "rank": list(x[1])}


def alph_from_json(data: dict) -> Alphabet:
    ranks = list(data["rank"])
    if len(ranks) != int(data["m"]):
        raise ValueError("rank vector length mismatch")
    return alphabet(ranks)
