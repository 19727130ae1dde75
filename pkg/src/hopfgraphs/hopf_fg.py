"""Hopf operations on the span of Feynman graphs.

Elements are LinComb dicts over canonical graph keys; ordered and unordered
keys are never mixed inside one element.  The gluing product carries the
weight parameter as an arbitrary QPoly (formal q by default, any rational
constant for specializations), the first coproduct sums restrictions over
ideals, the second coproduct and the coaction sum over compatible vertex
equivalences.  Basis-level results are memoized: the exhaustive verification
sweeps revisit the same small graphs constantly.
"""

from __future__ import annotations

from .errors import ModeMismatch
from .graphs import (
    compatible_equivalences,
    connected_components,
    fg_canonical,
    fg_empty,
    glue,
    has_cycle,
    ideals,
    partial_injections,
    quotient_eq,
    restrict,
    restrict_eq,
)
from .lincomb import lc_bilinear, lc_iadd, lc_iadd_term, lc_single
from .qpoly import ONE, Q, ZERO, QPoly

_PROD: dict = {}
_DELTA: dict = {}
_CE_PARTS: dict = {}
_RHO: dict = {}


def clear_caches() -> None:
    for d in (_PROD, _DELTA, _CE_PARTS, _RHO):
        d.clear()


def check_mode(a: dict, b: dict) -> None:
    ma = {k[4] for k in a}
    mb = {k[4] for k in b}
    if len(ma | mb) > 1:
        raise ModeMismatch("ordered and unordered keys mixed")


# ------------------------------------------------------------------ product

def basis_product(g, h, qcoef: QPoly = Q) -> dict:
    """Sum over partial injections of glued graphs, weighted qcoef^|A|."""
    if g[4] != h[4]:
        raise ModeMismatch("cannot multiply ordered with unordered")
    key = (g, h, qcoef)
    out = _PROD.get(key)
    if out is not None:
        return out
    acc: dict = {}
    powers = [qcoef**k for k in range(min(g[0], h[0]) + 1)]
    for sub, tgt in partial_injections(g[0], h[0]):
        w = powers[len(sub)]
        if not w:
            continue
        glued = fg_canonical(glue(g, h, sub, dict(zip(sub, tgt))))
        lc_iadd_term(acc, glued, w)
    _PROD[key] = acc
    return acc


def product_q(a: dict, b: dict, qcoef: QPoly = Q) -> dict:
    check_mode(a, b)
    return lc_bilinear(lambda g, h: basis_product(g, h, qcoef), a, b)


def unit(ordered=False) -> dict:
    return lc_single(fg_empty(ordered))


def psi_q(g, qcoef: QPoly = Q) -> dict:
    """Gluing product of the connected components; identity at weight 0."""
    if not qcoef:
        return lc_single(fg_canonical(g))
    comps = connected_components(g)
    if len(comps) <= 1:
        return lc_single(fg_canonical(g))
    out = lc_single(fg_canonical(restrict(g, comps[0])))
    for comp in comps[1:]:
        part = lc_single(fg_canonical(restrict(g, comp)))
        out = product_q(out, part, qcoef)
    return out


# --------------------------------------------------------------- coproducts

def basis_Delta(g) -> dict:
    """Ideal coproduct: restriction to the complement tensor restriction."""
    out = _DELTA.get(g)
    if out is not None:
        return out
    verts = set(range(g[0]))
    acc: dict = {}
    for a in ideals(g):
        left = fg_canonical(restrict(g, verts.difference(a)))
        right = fg_canonical(restrict(g, a))
        lc_iadd_term(acc, (left, right), ONE)
    _DELTA[g] = acc
    return acc


def coproduct_Delta(a: dict) -> dict:
    out: dict = {}
    for g, c in a.items():
        lc_iadd(out, basis_Delta(g), c)
    return out


def _ce(g):
    parts = _CE_PARTS.get(g)
    if parts is None:
        parts = compatible_equivalences(g)
        _CE_PARTS[g] = parts
    return parts


def basis_rho(g, q1: QPoly, q2: QPoly) -> dict:
    """Equivalence coaction: component products of quotient and restriction."""
    if g[4] and (q1 or q2):
        raise ModeMismatch("ordered mode supports the equivalence coproduct at 0 only")
    key = (g, q1, q2)
    out = _RHO.get(key)
    if out is not None:
        return out
    acc: dict = {}
    for part in _ce(g):
        left = psi_q(quotient_eq(g, part), q1)
        right = psi_q(restrict_eq(g, part), q2)
        for kl, cl in left.items():
            for kr, cr in right.items():
                lc_iadd_term(acc, (kl, kr), cl * cr)
    _RHO[key] = acc
    return acc


def coaction_rho(a: dict, q1: QPoly, q2: QPoly) -> dict:
    out: dict = {}
    for g, c in a.items():
        lc_iadd(out, basis_rho(g, q1, q2), c)
    return out


def coproduct_delta(a: dict) -> dict:
    return coaction_rho(a, ZERO, ZERO)


def delta_1(a: dict) -> dict:
    return coaction_rho(a, ONE, ONE)


# ------------------------------------------------------------------ counits

def counit_Delta(a: dict) -> QPoly:
    out = ZERO
    for g, c in a.items():
        if g[0] == 0:
            out = out + c
    return out


def counit_delta(a: dict) -> QPoly:
    """1 on graphs without internal edges, 0 otherwise, extended linearly."""
    out = ZERO
    for g, c in a.items():
        if not g[1]:
            out = out + c
    return out


# ----------------------------------------------------------------- antipode

def antipode_Delta(a: dict, qcoef: QPoly = Q) -> dict:
    """Antipode of the ideal-coproduct Hopf structure (vertex recursion)."""
    from .families import FG_FAMILY, antipode

    out: dict = {}
    for g, c in a.items():
        lc_iadd(out, antipode(FG_FAMILY, g, qcoef), c)
    return out


# ------------------------------------------------------- no-cycle quotient

def project_no_cycle(a: dict) -> dict:
    """Kill every graph containing a directed cycle on >= 2 vertices."""
    return {g: c for g, c in a.items() if not has_cycle(g)}


def ncfg_product_q(a: dict, b: dict, qcoef: QPoly = Q) -> dict:
    return project_no_cycle(product_q(a, b, qcoef))


def ncfg_Delta(a: dict) -> dict:
    return {
        pair: c
        for pair, c in coproduct_Delta(a).items()
        if not (has_cycle(pair[0]) or has_cycle(pair[1]))
    }


def ncfg_delta(a: dict) -> dict:
    return {
        pair: c
        for pair, c in coproduct_delta(a).items()
        if not (has_cycle(pair[0]) or has_cycle(pair[1]))
    }


# -------------------------------------------------------------- convenience

def element(g) -> dict:
    """Singleton element on the canonical class of g."""
    return lc_single(fg_canonical(g))
