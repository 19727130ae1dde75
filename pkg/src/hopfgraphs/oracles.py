"""Cross-checks of combinatorial structure constants against realizations.

Each check computes one side inside a truncated alphabet algebra and the
other by pushing the combinatorial operation through the realization map,
then compares exactly.  The word-algebra (ordered) identities hold on the
nose.  The commutative ones are only true up to automorphism factors - the
two-dot square is the smallest failure - so the commutative product check
also exists in an automorphism-weighted form, and unordered structure
constants are tied to the exact ordered checks through the order-forgetting
consistency helpers at the bottom.
"""

from __future__ import annotations

from fractions import Fraction

from . import hopf_fg
from .alphabets import alph_product, alph_size, alph_union, is_ordered
from .errors import InconclusiveOracle
from .graphs import fg_automorphisms, fg_canonical, has_cycle
from .qpoly import QPoly
from .quasiposets import is_poset
from .realization import doubling, realize_fg, realize_qp, realize_sg, squaring


def _tensor_expand(pairs_lc, alphX, alphY, q1, q2):
    """Realize both legs of a combinatorial tensor and expand to monomial
    pairs with rational coefficients."""
    out: dict = {}
    for (gl, gr), coeff in pairs_lc.items():
        if not coeff.is_const():
            raise ValueError("tensor has non-constant coefficients")
        c = coeff.eval_at(0)
        left = realize_fg(gl, alphX, q1)
        right = realize_fg(gr, alphY, q2)
        for ml, cl in left.terms.items():
            for mr, cr in right.terms.items():
                k = (ml, mr)
                s = out.get(k, 0) + c * cl * cr
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


def oracle_check_product(g, h, alph, q_values, weighted=False) -> bool:
    """Realization of the gluing product against the algebra product.

    Exact for ordered keys; for unordered keys exact only in the
    automorphism-weighted form (weighted=True multiplies every graph
    realization by its automorphism count).
    """
    g, h = fg_canonical(g), fg_canonical(h)
    if alph_size(alph) < g[0] + h[0]:
        raise InconclusiveOracle("alphabet smaller than the total vertex count")
    prod = hopf_fg.basis_product(g, h)
    cap = sum(g[2]) + sum(g[3]) + len(g[1]) + sum(h[2]) + sum(h[3]) + len(h[1])
    for q in q_values:
        q = Fraction(q)
        sg_w = fg_automorphisms(g) * fg_automorphisms(h) if weighted else 1
        lhs = realize_fg(g, alph, q, cap).mul(realize_fg(h, alph, q, cap))
        lhs = lhs.scale(sg_w)
        rhs: dict = {}
        for k, coeff in prod.items():
            c = coeff.eval_at(q)
            if weighted:
                c *= fg_automorphisms(k)
            if not c:
                continue
            for m, cm in realize_fg(k, alph, q).terms.items():
                s = rhs.get(m, 0) + c * cm
                if s:
                    rhs[m] = s
                else:
                    del rhs[m]
        if lhs.terms != rhs:
            return False
    return True


def oracle_check_Delta(g, alphX, alphY) -> bool:
    """Doubling of the realization against the ideal coproduct."""
    g = fg_canonical(g)
    if alph_size(alphX) + alph_size(alphY) < g[0]:
        raise InconclusiveOracle("union alphabet smaller than the vertex count")
    union = alph_union(alphX, alphY)
    lhs = doubling(realize_fg(g, union, 0), alph_size(alphX))
    rhs = _tensor_expand(hopf_fg.basis_Delta(g), alphX, alphY, 0, 0)
    return lhs == rhs


def oracle_check_delta(g, alphX, alphY, q1, q2) -> bool:
    """Squaring of the realization against the equivalence coaction."""
    g = fg_canonical(g)
    q1, q2 = Fraction(q1), Fraction(q2)
    if alph_size(alphX) * alph_size(alphY) < g[0]:
        raise InconclusiveOracle("product alphabet smaller than the vertex count")
    prod_alph = alph_product(alphX, alphY)
    lhs = squaring(
        realize_fg(g, prod_alph, q1 * q2), alph_size(alphX), alph_size(alphY), q1, q2
    )
    rho = hopf_fg.basis_rho(g, QPoly.const(q1), QPoly.const(q2))
    rhs = _tensor_expand(rho, alphX, alphY, q1, q2)
    return lhs == rhs


def _stratum_left(g, part, alph):
    """Word monomials of the labeled quotient graph whose letters are tied
    inside every block and strictly increasing along every surviving edge.

    These are exactly the first-component patterns the squaring morphism
    produces for the given compatible equivalence at weight zero.
    """
    import itertools as _it

    from .graphs import quotient_eq

    gq = quotient_eq(g, part)
    n, edges, ein, eout, _ = gq
    size, ranks = alph
    emult = {}
    for e in edges:
        emult[e] = emult.get(e, 0) + 1
    out = []
    for tau in _it.permutations(range(size), n):
        ok = True
        for block in part:
            r0 = ranks[tau[block[0]]]
            if any(ranks[tau[v]] != r0 for v in block[1:]):
                ok = False
                break
        if ok:
            for u, v in emult:
                if ranks[tau[u]] >= ranks[tau[v]]:
                    ok = False
                    break
        if not ok:
            continue
        medges = {}
        for (u, v), mult in emult.items():
            k = (tau[u], tau[v])
            medges[k] = medges.get(k, 0) + mult
        out.append(
            (
                tuple(tau),
                tuple(sorted(medges.items())),
                tuple(sorted((tau[j], c) for j, c in enumerate(ein) if c)),
                tuple(sorted((tau[i], c) for i, c in enumerate(eout) if c)),
            )
        )
    return out


def delta_stratum(g, part, alphX, alphY):
    """Tensor stratum of one compatible equivalence in the squaring image."""
    from .graphs import restrict_eq

    right = realize_fg(restrict_eq(g, part), alphY, 0)
    out: dict = {}
    for ml in _stratum_left(g, part, alphX):
        for mr, cr in right.terms.items():
            out[(ml, mr)] = out.get((ml, mr), 0) + cr
    return out


def oracle_check_delta_stratified(g, alphX, alphY, require_nonempty=False) -> bool:
    """Exact word-algebra check of the equivalence coproduct at weight zero.

    The squaring of the realization must equal the sum over compatible
    equivalences of (tied-block strict-edge quotient monomials) tensor
    (realization of the block restriction).  With require_nonempty the check
    also insists every stratum is realized, which pins the equivalence list
    from both sides when the first alphabet has enough levels and ties.
    """
    from .graphs import compatible_equivalences

    g = fg_canonical(g)
    if not g[4]:
        g = ordered_lift_fg(g)
    prod_alph = alph_product(alphX, alphY)
    lhs = squaring(
        realize_fg(g, prod_alph, 0), alph_size(alphX), alph_size(alphY), 0, 0
    )
    rhs: dict = {}
    for part in compatible_equivalences(g):
        stratum = delta_stratum(g, part, alphX, alphY)
        if require_nonempty and not stratum:
            return False
        for k, c in stratum.items():
            s = rhs.get(k, 0) + c
            if s:
                rhs[k] = s
            else:
                del rhs[k]
    return lhs == rhs


def realization_vanishes(kind: str, key, alph) -> bool:
    """Whether the realization over the alphabet is zero."""
    if not is_ordered(alph) and alph_size(alph) < key[0]:
        raise InconclusiveOracle("alphabet smaller than the vertex count")
    if kind == "fg":
        return realize_fg(key, alph).is_zero()
    if kind == "sg":
        return realize_sg(key, alph).is_zero()
    if kind == "qp":
        return realize_qp(key, alph).is_zero()
    raise ValueError(f"unknown kind {kind!r}")


def oracle_check_no_cycle(kind: str, key, ordered_alph) -> bool:
    """Over an ordered alphabet the realization vanishes exactly on graphs
    with a cycle (quasi-posets: exactly off the posets)."""
    if not is_ordered(ordered_alph):
        raise InconclusiveOracle("need an ordered alphabet")
    vanishes = realization_vanishes(kind, key, ordered_alph)
    if kind == "qp":
        return vanishes == (not is_poset(key))
    if kind == "sg":
        from .graphs import sg_has_cycle

        return vanishes == sg_has_cycle(key)
    return vanishes == has_cycle(key)


# ---------------------------------------------- order-forgetting consistency

def forget_order_fg(g):
    return fg_canonical(g[:4] + (False,))


def ordered_lift_fg(g):
    """The identity labeling of the canonical representative."""
    return fg_canonical(g)[:4] + (True,)


def forget_lc(a: dict) -> dict:
    out: dict = {}
    for k, c in a.items():
        kk = forget_order_fg(k)
        s = out.get(kk)
        out[kk] = c if s is None else s + c
    return {k: c for k, c in out.items() if c}


def forget_tensor(t: dict) -> dict:
    out: dict = {}
    for key, c in t.items():
        kk = tuple(forget_order_fg(k) for k in key)
        s = out.get(kk)
        out[kk] = c if s is None else s + c
    return {k: c for k, c in out.items() if c}


def check_forget_product(g, h) -> bool:
    """Unordered gluing product = order-forgetting of the ordered one."""
    g, h = fg_canonical(g), fg_canonical(h)
    lifted = hopf_fg.basis_product(ordered_lift_fg(g), ordered_lift_fg(h))
    return forget_lc(lifted) == hopf_fg.basis_product(g, h)


def check_forget_Delta(g) -> bool:
    g = fg_canonical(g)
    lifted = hopf_fg.basis_Delta(ordered_lift_fg(g))
    return forget_tensor(lifted) == hopf_fg.basis_Delta(g)


def check_forget_delta(g) -> bool:
    from .qpoly import ZERO

    g = fg_canonical(g)
    lifted = hopf_fg.basis_rho(ordered_lift_fg(g), ZERO, ZERO)
    return forget_tensor(lifted) == hopf_fg.basis_rho(g, ZERO, ZERO)
