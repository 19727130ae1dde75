"""Hopf operations on simple oriented graphs.

The simple-graph algebra is the quotient of the Feynman-graph one by the
simplification map (forget external half-edges, loops and multiplicities);
every operation here pushes the graph-level formula through that map, so
elements are LinComb dicts over canonical simple-digraph keys.
"""

from __future__ import annotations

from . import hopf_fg
from .errors import ModeMismatch
from .graphs import (
    sg_canonical,
    sg_empty,
    sg_has_cycle,
    sg_to_fg,
    simplify,
)
from .lincomb import lc_bilinear, lc_iadd, lc_iadd_term, lc_map_keys, lc_single
from .qpoly import Q, ZERO, QPoly

_PROD: dict = {}
_DELTA: dict = {}
_SMALLDELTA: dict = {}


def clear_caches() -> None:
    for d in (_PROD, _DELTA, _SMALLDELTA):
        d.clear()


def _skey(g) -> tuple:
    return sg_canonical(simplify(g))


def basis_product(s, t, qcoef: QPoly = Q) -> dict:
    if s[2] != t[2]:
        raise ModeMismatch("cannot multiply ordered with unordered")
    key = (s, t, qcoef)
    out = _PROD.get(key)
    if out is not None:
        return out
    raw = hopf_fg.basis_product(sg_to_fg(s), sg_to_fg(t), qcoef)
    acc: dict = {}
    for g, c in raw.items():
        lc_iadd_term(acc, _skey(g), c)
    _PROD[key] = acc
    return acc


def sg_product_q(a: dict, b: dict, qcoef: QPoly = Q) -> dict:
    return lc_bilinear(lambda s, t: basis_product(s, t, qcoef), a, b)


def unit(ordered=False) -> dict:
    return lc_single(sg_empty(ordered))


def basis_Delta(s) -> dict:
    out = _DELTA.get(s)
    if out is not None:
        return out
    acc: dict = {}
    for (l, r), c in hopf_fg.basis_Delta(sg_to_fg(s)).items():
        lc_iadd_term(acc, (_skey(l), _skey(r)), c)
    _DELTA[s] = acc
    return acc


def sg_Delta(a: dict) -> dict:
    out: dict = {}
    for s, c in a.items():
        lc_iadd(out, basis_Delta(s), c)
    return out


def basis_delta(s) -> dict:
    out = _SMALLDELTA.get(s)
    if out is not None:
        return out
    acc: dict = {}
    for (l, r), c in hopf_fg.basis_rho(sg_to_fg(s), ZERO, ZERO).items():
        lc_iadd_term(acc, (_skey(l), _skey(r)), c)
    _SMALLDELTA[s] = acc
    return acc


def sg_delta(a: dict) -> dict:
    out: dict = {}
    for s, c in a.items():
        lc_iadd(out, basis_delta(s), c)
    return out


def morphism_S(a: dict) -> dict:
    """Project a Feynman-graph element onto simple graphs, linearly."""
    return lc_map_keys(a, _skey)


def sg_project_no_cycle(a: dict) -> dict:
    return {s: c for s, c in a.items() if not sg_has_cycle(s)}


def ncsg_product_q(a: dict, b: dict, qcoef: QPoly = Q) -> dict:
    return sg_project_no_cycle(sg_product_q(a, b, qcoef))


def ncsg_Delta(a: dict) -> dict:
    return {
        pair: c
        for pair, c in sg_Delta(a).items()
        if not (sg_has_cycle(pair[0]) or sg_has_cycle(pair[1]))
    }


def element(s) -> dict:
    return lc_single(sg_canonical(s))
