"""Formal linear combinations over canonical basis keys.

A combination is a plain dict mapping a hashable canonical key to a nonzero
QPoly coefficient; the empty dict is zero.  Keys are whatever the graph and
poset modules produce (nested tuples), and tensors are combinations keyed by
pairs or triples of such keys.  All helpers prune zero coefficients, so two
combinations are equal iff the dicts are equal.

  LinComb  =  dict[K, QPoly]
  tensor   =  dict[tuple[K, K], QPoly]   (or triples, quadruples)
"""

from __future__ import annotations

from typing import Callable, Hashable, TypeVar

from .qpoly import ONE, QPoly

K = TypeVar("K", bound=Hashable)
LinComb = dict


def lc_zero() -> dict:
    return {}

def lc_single(key, coeff: QPoly = ONE) -> dict:
    return {key: coeff} if coeff else {}


def lc_iadd_term(acc: dict, key, coeff: QPoly) -> None:
    """Accumulate coeff at key in place, pruning on cancellation."""
    cur = acc.get(key)
    if cur is None:
        if coeff:
            acc[key] = coeff
        return
    s = cur + coeff
    if s:
        acc[key] = s
    else:
        del acc[key]


def lc_iadd(acc: dict, other: dict, scale: QPoly = ONE) -> None:
    if scale == ONE:
        for k, c in other.items():
            lc_iadd_term(acc, k, c)
    else:
        for k, c in other.items():
            lc_iadd_term(acc, k, scale * c)


def lc_add(a: dict, b: dict) -> dict:
    out = dict(a)
    lc_iadd(out, b)
    return out


def lc_neg(a: dict) -> dict:
    return {k: -c for k, c in a.items()}


def lc_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        lc_iadd_term(out, k, -c)
    return out


def lc_scale(a: dict, coeff: QPoly) -> dict:
    if not coeff:
        return {}
    return {k: coeff * c for k, c in a.items()}


def lc_map_keys(a: dict, f: Callable) -> dict:
    """Push the combination through a key map (linear extension of f)."""
    out: dict = {}
    for k, c in a.items():
        lc_iadd_term(out, f(k), c)
    return out


def lc_bilinear(f: Callable, a: dict, b: dict) -> dict:
    """Bilinear extension of a basis-level map f(ka, kb) -> LinComb."""
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            lc_iadd(out, f(ka, kb), ca * cb)
    return out


def lc_tensor(a: dict, b: dict) -> dict:
    """Tensor two combinations into one keyed by key pairs."""
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            lc_iadd_term(out, (ka, kb), ca * cb)
    return out


def lc_apply_leg(t: dict, leg: int, f: Callable) -> dict:
    """Apply a basis map returning LinComb to one tensor leg, linearly."""
    out: dict = {}
    for key, c in t.items():
        img = f(key[leg])
        for k2, c2 in img.items():
            nk = key[:leg] + (k2,) + key[leg + 1 :]
            lc_iadd_term(out, nk, c * c2)
    return out


def m_1_3_24(t: dict, mul: Callable) -> dict:
    """Send x (x) y (x) z (x) t to x (x) z (x) (y*t) on quadruple tensors.

    mul(ky, kt) must return a LinComb in the third-leg algebra.
    """
    out: dict = {}
    for (k1, k2, k3, k4), c in t.items():
        prod = mul(k2, k4)
        for kp, cp in prod.items():
            lc_iadd_term(out, (k1, k3, kp), c * cp)
    return out


def lc_eval_q(a: dict, r) -> dict:
    """Specialize formal q to a rational; coefficients become constants."""
    out: dict = {}
    for k, c in a.items():
        v = c.eval_at(r)
        if v:
            out[k] = QPoly.const(v)
    return out


def lc_to_json(a: dict, key_to_json: Callable) -> list:
    items = [{"coeff": c.to_json(), "key": key_to_json(k)} for k, c in a.items()]
    items.sort(key=lambda rec: str(rec["key"]))
    return items


def tensor_to_json(t: dict, key_to_json: Callable) -> list:
    items = []
    for key, c in t.items():
        rec = {"coeff": c.to_json()}
        if len(key) == 2:
            rec["left"], rec["right"] = key_to_json(key[0]), key_to_json(key[1])
        else:
            rec["legs"] = [key_to_json(k) for k in key]
        items.append(rec)
    items.sort(key=lambda rec: str(rec))
    return items
