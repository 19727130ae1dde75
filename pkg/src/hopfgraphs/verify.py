"""Named verification suites over exhaustive small-object families.

Every suite walks a family of basis elements (or pairs) under explicit
bounds, checks one law exactly, and returns a Report with the check count
and the failures (as printable descriptions).  The command-line front end
and the acceptance tests both run these.
"""

from __future__ import annotations

import time
from fractions import Fraction

from . import hopf_fg, hopf_sg, quasiposets as qp
from .alphabets import alph_all_equal, alph_ordered, alphabet
from .enumeration import (
    enum_fg_upto,
    enum_posets_upto,
    enum_qp_upto,
    enum_sg_upto,
)
from .families import FAMILIES, antipode, antipode_axiom_holds
from .graphs import fg_automorphisms, has_cycle, sg_has_cycle
from .lincomb import lc_iadd_term, lc_single
from .oracles import (
    check_forget_Delta,
    check_forget_delta,
    check_forget_product,
    oracle_check_Delta,
    oracle_check_delta_stratified,
    oracle_check_no_cycle,
    oracle_check_product,
    ordered_lift_fg,
)
from .poset_dual import (
    automorphism_count,
    blacktriangle,
    count_C_and_D,
    pairing,
    star,
)
from .qpoly import ONE, Q, ZERO, QPoly


class Report:
    def __init__(self, suite: str):
        self.suite = suite
        self.checks = 0
        self.failures: list[str] = []
        self.seconds = 0.0

    def check(self, ok: bool, describe) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(describe() if callable(describe) else str(describe))

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checks": self.checks,
            "failed": len(self.failures),
            "failures": self.failures[:20],
            "seconds": round(self.seconds, 3),
            "passed": self.passed,
        }

    def __repr__(self):
        state = "pass" if self.passed else f"FAIL({len(self.failures)})"
        return f"<{self.suite}: {self.checks} checks, {state}, {self.seconds:.2f}s>"


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.seconds = time.perf_counter() - t0
        return report

    return wrapper


# ------------------------------------------------------------ family bases

def family_basis(name: str, ordered: bool, max_vertices: int, max_edges: int,
                 max_ext: int = 1):
    if name == "fg":
        return enum_fg_upto(max_vertices, max_edges, max_ext, ordered)
    if name == "sg":
        return [s for s in enum_sg_upto(max_vertices, ordered) if len(s[1]) <= max_edges]
    if name == "qp":
        return enum_qp_upto(max_vertices, ordered)
    if name == "poset":
        return enum_posets_upto(max_vertices, ordered)
    raise ValueError(f"unknown family {name!r}")


def _coassoc_sides(fam, g):
    d = fam.basis_Delta(g)
    lhs: dict = {}
    rhs: dict = {}
    for (a, b), c in d.items():
        for (x, y), c2 in fam.basis_Delta(a).items():
            lc_iadd_term(lhs, (x, y, b), c * c2)
        for (x, y), c2 in fam.basis_Delta(b).items():
            lc_iadd_term(rhs, (a, x, y), c * c2)
    return lhs, rhs


def _tensor_mul(fam, ta, tb, qcoef):
    out: dict = {}
    for (l1, r1), c1 in ta.items():
        for (l2, r2), c2 in tb.items():
            left = fam.basis_product(l1, l2, qcoef)
            right = fam.basis_product(r1, r2, qcoef)
            c = c1 * c2
            for kl, cl in left.items():
                for kr, cr in right.items():
                    lc_iadd_term(out, (kl, kr), c * cl * cr)
    return out


@_timed
def suite_coassoc(family="fg", ordered=False, max_vertices=3, max_edges=3,
                  max_ext=1) -> Report:
    """(Delta x Id) Delta = (Id x Delta) Delta on every basis element."""
    rep = Report(f"coassoc-{family}{'-ordered' if ordered else ''}")
    fam = FAMILIES[family]
    for g in family_basis(family, ordered, max_vertices, max_edges, max_ext):
        lhs, rhs = _coassoc_sides(fam, g)
        rep.check(lhs == rhs, lambda g=g: f"coassociativity fails on {g}")
    return rep


@_timed
def suite_counit(family="fg", ordered=False, max_vertices=3, max_edges=3,
                 max_ext=1) -> Report:
    """Both counit laws of the ideal coproduct on every basis element."""
    rep = Report(f"counit-{family}{'-ordered' if ordered else ''}")
    fam = FAMILIES[family]
    for g in family_basis(family, ordered, max_vertices, max_edges, max_ext):
        d = fam.basis_Delta(g)
        left: dict = {}
        right: dict = {}
        for (a, b), c in d.items():
            if fam.size(a) == 0:
                lc_iadd_term(left, b, c)
            if fam.size(b) == 0:
                lc_iadd_term(right, a, c)
        rep.check(left == {g: ONE}, lambda g=g: f"left counit fails on {g}")
        rep.check(right == {g: ONE}, lambda g=g: f"right counit fails on {g}")
    return rep


@_timed
def suite_compat(family="fg", ordered=False, max_vertices=3, max_edges=3,
                 max_ext=1) -> Report:
    """Delta(a * b) = Delta(a) Delta(b) with formal weight, over pairs with
    a joint vertex budget."""
    rep = Report(f"compat-{family}{'-ordered' if ordered else ''}")
    fam = FAMILIES[family]
    basis = [
        g
        for g in family_basis(family, ordered, max_vertices, max_edges, max_ext)
        if 0 < fam.size(g)
    ]
    for i, a in enumerate(basis):
        for b in basis[i:] if not ordered else basis:
            if fam.size(a) + fam.size(b) > max_vertices:
                continue
            prod = fam.basis_product(a, b, Q)
            lhs: dict = {}
            for k, c in prod.items():
                for pair, c2 in fam.basis_Delta(k).items():
                    lc_iadd_term(lhs, pair, c * c2)
            rhs = _tensor_mul(fam, fam.basis_Delta(a), fam.basis_Delta(b), Q)
            rep.check(lhs == rhs, lambda a=a, b=b: f"compatibility fails on {a} * {b}")
    return rep


@_timed
def suite_antipode(family="fg", ordered=False, max_vertices=3, max_edges=3,
                   max_ext=1) -> Report:
    """m (S x Id) Delta = unit counit, formal weight, every basis element."""
    rep = Report(f"antipode-{family}{'-ordered' if ordered else ''}")
    fam = FAMILIES[family]
    for g in family_basis(family, ordered, max_vertices, max_edges, max_ext):
        rep.check(
            antipode_axiom_holds(fam, g, Q),
            lambda g=g: f"antipode axiom fails on {g}",
        )
    return rep


@_timed
def suite_product_laws(family="fg", ordered=False, max_vertices=3, max_edges=3,
                       max_ext=1) -> Report:
    """Associativity (and commutativity in unordered mode) of the gluing
    product with formal weight, over pairs and triples within the budget."""
    rep = Report(f"product-laws-{family}{'-ordered' if ordered else ''}")
    fam = FAMILIES[family]
    basis = [
        g
        for g in family_basis(family, ordered, max_vertices, max_edges, max_ext)
        if 0 < fam.size(g) <= max_vertices - 1
    ]
    for a in basis:
        for b in basis:
            if fam.size(a) + fam.size(b) > max_vertices:
                continue
            ab = fam.basis_product(a, b, Q)
            if not ordered:
                ba = fam.basis_product(b, a, Q)
                rep.check(ab == ba, lambda a=a, b=b: f"commutativity fails {a},{b}")
            for c in basis:
                if fam.size(a) + fam.size(b) + fam.size(c) > max_vertices:
                    continue
                lhs: dict = {}
                for k, w in ab.items():
                    for k2, w2 in fam.basis_product(k, c, Q).items():
                        lc_iadd_term(lhs, k2, w * w2)
                rhs: dict = {}
                for k, w in fam.basis_product(b, c, Q).items():
                    for k2, w2 in fam.basis_product(a, k, Q).items():
                        lc_iadd_term(rhs, k2, w * w2)
                rep.check(
                    lhs == rhs, lambda a=a, b=b, c=c: f"associativity fails {a},{b},{c}"
                )
    return rep


# ------------------------------------------------------------ cointeraction

def _rho_delta_independent(g):
    """The equivalence coproduct recomputed without the psi machinery."""
    from .graphs import compatible_equivalences, fg_canonical, quotient_eq, restrict_eq

    out: dict = {}
    for part in compatible_equivalences(g):
        key = (fg_canonical(quotient_eq(g, part)), fg_canonical(restrict_eq(g, part)))
        lc_iadd_term(out, key, ONE)
    return out


@_timed
def suite_cointeraction(max_vertices=3, max_edges=3, max_ext=1, ordered=False) -> Report:
    """(Delta x Id) rho = m_{1,3,24} (rho x rho) Delta at (0,0) and (q,1),
    plus rho_{0,0} = equivalence coproduct and the coaction counit law."""
    rep = Report("cointeraction-fg" + ("-ordered" if ordered else ""))
    basis = family_basis("fg", ordered, max_vertices, max_edges, max_ext)
    qpairs = [(ZERO, ZERO)] if ordered else [(ZERO, ZERO), (Q, ONE)]
    for g in basis:
        rep.check(
            hopf_fg.basis_rho(g, ZERO, ZERO) == _rho_delta_independent(g),
            lambda g=g: f"rho(0,0) differs from the equivalence coproduct on {g}",
        )
        for q1, q2 in qpairs:
            rho_g = hopf_fg.basis_rho(g, q1, q2)
            lhs: dict = {}
            for (x, y), c in rho_g.items():
                for (a, b), c2 in hopf_fg.basis_Delta(x).items():
                    lc_iadd_term(lhs, (a, b, y), c * c2)
            rhs: dict = {}
            for (g1, g2), c in hopf_fg.basis_Delta(g).items():
                rho1 = hopf_fg.basis_rho(g1, q1, q2)
                rho2 = hopf_fg.basis_rho(g2, q1, q2)
                for (x, y), cx in rho1.items():
                    for (z, t), cz in rho2.items():
                        c3 = c * cx * cz
                        for k, ck in hopf_fg.basis_product(y, t, q2).items():
                            lc_iadd_term(rhs, (x, z, k), c3 * ck)
            rep.check(
                lhs == rhs,
                lambda g=g, q1=q1, q2=q2: f"cointeraction fails on {g} at ({q1},{q2})",
            )
            # coaction counit: (eps x Id) rho(g) = eps(g) 1
            eps_side: dict = {}
            for (x, y), c in rho_g.items():
                if x[0] == 0:
                    lc_iadd_term(eps_side, y, c)
            expect = {g: ONE} if g[0] == 0 else {}
            rep.check(
                eps_side == expect,
                lambda g=g: f"coaction counit fails on {g}",
            )
    return rep


# -------------------------------------------------------- morphism diagram

@_timed
def suite_morphisms(max_vertices=3, max_edges=3, max_ext=1, ordered=False) -> Report:
    """The projection/simplification/path-order diagram commutes, and each
    arrow is a bialgebra morphism, exhaustively within the bounds."""
    rep = Report("morphism-diagram" + ("-ordered" if ordered else ""))
    fg_basis = family_basis("fg", ordered, max_vertices, max_edges, max_ext)
    sg_basis = family_basis("sg", ordered, max_vertices, max_edges)

    def S(a):
        return hopf_sg.morphism_S(a)

    def P(a):
        return qp.morphism_P(a)

    for g in fg_basis:
        a = lc_single(g)
        # simplification square against the no-cycle projections
        rep.check(
            S(hopf_fg.project_no_cycle(a)) == hopf_sg.sg_project_no_cycle(S(a)),
            lambda g=g: f"S T != T S on {g}",
        )
        # simplification is a coalgebra morphism for both coproducts
        lhs = {}
        for (x, y), c in hopf_fg.coproduct_Delta(a).items():
            lc_iadd_term(lhs, (hopf_sg._skey(x), hopf_sg._skey(y)), c)
        rep.check(lhs == hopf_sg.sg_Delta(S(a)), lambda g=g: f"(S x S) Delta != Delta S on {g}")
        lhs = {}
        for (x, y), c in hopf_fg.coproduct_delta(a).items():
            lc_iadd_term(lhs, (hopf_sg._skey(x), hopf_sg._skey(y)), c)
        rep.check(lhs == hopf_sg.sg_delta(S(a)), lambda g=g: f"(S x S) delta != delta S on {g}")
        # full composite to posets, both routes
        route1 = qp.project_posets(P(S(hopf_fg.project_no_cycle(a))))
        route2 = P(hopf_sg.sg_project_no_cycle(S(a)))
        rep.check(route1 == qp.project_posets(route2), lambda g=g: f"composite routes differ on {g}")

    for s in sg_basis:
        a = lc_single(s)
        rep.check(
            qp.project_posets(P(hopf_sg.sg_project_no_cycle(a)))
            == qp.project_posets(P(a)),
            lambda s=s: f"P T != T P on {s}",
        )
        lhs = {}
        for (x, y), c in hopf_sg.sg_Delta(a).items():
            lc_iadd_term(lhs, (qp.qp_canonical(qp.path_order(x)), qp.qp_canonical(qp.path_order(y))), c)
        rep.check(lhs == qp.qp_Delta(P(a)), lambda s=s: f"(P x P) Delta != Delta P on {s}")

    # algebra morphisms over jointly bounded pairs, formal weight
    fg_small = [g for g in fg_basis if 0 < g[0]]
    for a in fg_small:
        for b in fg_small:
            if a[0] + b[0] > max_vertices:
                continue
            pa, pb = lc_single(a), lc_single(b)
            rep.check(
                S(hopf_fg.product_q(pa, pb)) == hopf_sg.sg_product_q(S(pa), S(pb)),
                lambda a=a, b=b: f"S product square fails on {a},{b}",
            )
            rep.check(
                hopf_fg.project_no_cycle(hopf_fg.product_q(pa, pb))
                == hopf_fg.ncfg_product_q(
                    hopf_fg.project_no_cycle(pa), hopf_fg.project_no_cycle(pb)
                ),
                lambda a=a, b=b: f"T product square fails on {a},{b}",
            )
    sg_small = [s for s in sg_basis if 0 < s[0]]
    for a in sg_small:
        for b in sg_small:
            if a[0] + b[0] > max_vertices:
                continue
            pa, pb = lc_single(a), lc_single(b)
            rep.check(
                P(hopf_sg.sg_product_q(pa, pb)) == qp.qp_product_q(P(pa), P(pb)),
                lambda a=a, b=b: f"P product square fails on {a},{b}",
            )
    return rep


# ------------------------------------------------------------ oracle suites

@_timed
def suite_oracle_products(alphabet_size=6, max_vertices=2, max_edges=2,
                          max_ext=1, qs=(0, 1, 2, Fraction(1, 2))) -> Report:
    """Word-algebra product oracle on ordered lifts (exact), the
    automorphism-weighted commutative oracle, and order-forgetting
    consistency, over every pair in the family."""
    rep = Report("oracle-products")
    alph = alph_all_equal(alphabet_size)
    basis = family_basis("fg", False, max_vertices, max_edges, max_ext)
    for i, g in enumerate(basis):
        for h in basis[i:]:
            lg, lh = ordered_lift_fg(g), ordered_lift_fg(h)
            rep.check(
                oracle_check_product(lg, lh, alph, qs),
                lambda g=g, h=h: f"ordered product oracle fails on {g},{h}",
            )
            rep.check(
                oracle_check_product(g, h, alph, qs, weighted=True),
                lambda g=g, h=h: f"weighted product oracle fails on {g},{h}",
            )
            rep.check(
                check_forget_product(g, h),
                lambda g=g, h=h: f"order forgetting fails on {g},{h}",
            )
    return rep


@_timed
def suite_oracle_coproducts(alphabet_size=6, max_vertices=2, max_edges=2,
                            max_ext=1) -> Report:
    """Doubling oracle for the ideal coproduct (exact on ordered lifts) and
    the stratified squaring oracle for the equivalence coproduct, plus
    order-forgetting consistency for both coproducts."""
    rep = Report("oracle-coproducts")
    half = alphabet_size // 2
    ax, ay = alph_all_equal(half), alph_all_equal(alphabet_size - half)
    sx = alphabet([lvl for lvl in range(2) for _ in range(half)])
    sy = alph_all_equal(alphabet_size - half)
    basis = family_basis("fg", False, max_vertices, max_edges, max_ext)
    for g in basis:
        lg = ordered_lift_fg(g)
        rep.check(
            oracle_check_Delta(lg, ax, ay),
            lambda g=g: f"ordered doubling oracle fails on {g}",
        )
        rep.check(
            oracle_check_delta_stratified(lg, sx, sy, require_nonempty=True),
            lambda g=g: f"stratified squaring oracle fails on {g}",
        )
        rep.check(check_forget_Delta(g), lambda g=g: f"Delta forgetting fails on {g}")
        rep.check(check_forget_delta(g), lambda g=g: f"delta forgetting fails on {g}")
    return rep


@_timed
def suite_no_cycle(alphabet_size=6, max_vertices=3, max_edges=3, max_ext=1) -> Report:
    """Realization vanishes exactly on graphs with cycles (ordered alphabet),
    for Feynman graphs, simple graphs and quasi-posets (non-posets)."""
    rep = Report("no-cycle")
    alph = alph_ordered(alphabet_size)
    for g in family_basis("fg", False, max_vertices, max_edges, max_ext):
        rep.check(
            oracle_check_no_cycle("fg", g, alph),
            lambda g=g: f"no-cycle oracle fails on fg {g}",
        )
    for s in family_basis("sg", False, max_vertices, max_edges):
        rep.check(
            oracle_check_no_cycle("sg", s, alph),
            lambda s=s: f"no-cycle oracle fails on sg {s}",
        )
    for p in enum_qp_upto(max_vertices):
        rep.check(
            oracle_check_no_cycle("qp", p, alph),
            lambda p=p: f"poset-vanishing oracle fails on {p}",
        )
    return rep


# ------------------------------------------------------------ poset duality

@_timed
def suite_duality(max_size=5) -> Report:
    """<P * Q, R> = <P x Q, Delta(R)> over all triples with matching sizes,
    and the splitting/gluing tallies agree."""
    rep = Report("duality-posets")
    all_posets = enum_posets_upto(max_size)
    by_size = {n: [p for p in all_posets if p[0] == n] for n in range(max_size + 1)}
    for total in range(max_size + 1):
        for na in range(total + 1):
            nb = total - na
            for p1 in by_size[na]:
                for p2 in by_size[nb]:
                    st = star(lc_single(p1), lc_single(p2))
                    for r in by_size[total]:
                        lhs = pairing(st, lc_single(r))
                        rhs = ZERO
                        for (a, b), c in qp.basis_Delta(r).items():
                            if a == p1 and b == p2:
                                s = automorphism_count(p1) * automorphism_count(p2)
                                rhs = rhs + c.scale(s)
                        rep.check(
                            lhs == rhs,
                            lambda p1=p1, p2=p2, r=r: f"duality fails on {p1},{p2},{r}",
                        )
                        cC, cD = count_C_and_D(p1, p2, r)
                        rep.check(
                            cC == cD,
                            lambda p1=p1, p2=p2, r=r: f"C/D counts differ on {p1},{p2},{r}",
                        )
    return rep


@_timed
def suite_triangle(max_total=4) -> Report:
    """<x, y *_0 z> = <triangle(x), y x z> over all poset triples with the
    matching total size, plus coassociativity and counit of the component
    coproduct."""
    rep = Report("triangle-adjunction")
    posets = enum_posets_upto(max_total)
    by_size: dict[int, list] = {}
    for p in posets:
        by_size.setdefault(p[0], []).append(p)
    for x in posets:
        bt = blacktriangle(x)
        # coassociativity of the component coproduct
        lhs: dict = {}
        rhs: dict = {}
        for (a, b), c in bt.items():
            for (u, v), c2 in blacktriangle(a).items():
                lc_iadd_term(lhs, (u, v, b), c * c2)
            for (u, v), c2 in blacktriangle(b).items():
                lc_iadd_term(rhs, (a, u, v), c * c2)
        rep.check(lhs == rhs, lambda x=x: f"component coassociativity fails on {x}")
        # counit
        left: dict = {}
        for (a, b), c in bt.items():
            if a[0] == 0:
                lc_iadd_term(left, b, c)
        rep.check(left == {x: ONE}, lambda x=x: f"component counit fails on {x}")
        # adjunction against the disjoint-union product
        n = x[0]
        for ny in range(n + 1):
            for y in by_size.get(ny, ()):
                for z in by_size.get(n - ny, ()):
                    lhs_v = pairing(
                        lc_single(x), qp.poset_product_q(lc_single(y), lc_single(z), ZERO)
                    )
                    rhs_v = ZERO
                    for (a, b), c in bt.items():
                        if a == y and b == z:
                            s = automorphism_count(y) * automorphism_count(z)
                            rhs_v = rhs_v + c.scale(s)
                    rep.check(
                        lhs_v == rhs_v,
                        lambda x=x, y=y, z=z: f"adjunction fails on {x};{y},{z}",
                    )
    return rep


# ------------------------------------------------------- alphabet diagrams

def _random_element(rng, alph, q, ordered, n_vars=3):
    """A random span of at most three monomials of degree at most three."""
    from .realization import AlgElement

    size = alph[0]
    terms = {}
    for _ in range(rng.randint(1, 3)):
        letters = rng.sample(range(size), rng.randint(0, min(3, size)))
        edges = {}
        ein = {}
        eout = {}
        deg = 0
        for _ in range(rng.randint(0, 3)):
            if deg >= 3 or not letters:
                break
            kind = rng.randint(0, 2)
            if kind == 0:
                i, j = rng.choice(letters), rng.choice(letters)
                if alph[1][i] <= alph[1][j]:
                    edges[(i, j)] = edges.get((i, j), 0) + 1
                    deg += 1
            elif kind == 1:
                j = rng.choice(letters)
                ein[j] = ein.get(j, 0) + 1
                deg += 1
            else:
                i = rng.choice(letters)
                eout[i] = eout.get(i, 0) + 1
                deg += 1
        from .monomials import mono

        word = letters if ordered else sorted(letters)
        m = mono(word, edges, ein, eout, ordered=ordered)
        terms[m] = terms.get(m, 0) + rng.randint(-2, 2)
    terms = {m: c for m, c in terms.items() if c}
    return AlgElement(alph, q, terms, ordered=ordered, cap=None)


@_timed
def suite_alphabet_diagrams(max_letters=2, n_random=100, seed=5, ordered=False) -> Report:
    """Coassociativity of doubling, coassociativity of squaring with weight
    bookkeeping, and the mixed doubling/squaring diagram, on all generators
    and random low-degree elements."""
    import random

    from .alphabets import alph_product, alph_size, alph_union
    from .monomials import mono, mono_mul
    from .realization import AlgElement, doubling, squaring

    rng = random.Random(seed)
    rep = Report("alphabet-diagrams" + ("-ordered" if ordered else ""))
    flat = alphabet([0] * max_letters)
    steep = alphabet(list(range(max_letters)))
    shapes = [(flat, steep, steep), (steep, flat, flat), (flat, flat, steep)]

    def gens(alph, orderedflag):
        size = alph[0]
        out = [mono([i], ordered=orderedflag) for i in range(size)]
        out += [
            mono([], {(i, j): 1}, ordered=orderedflag)
            for i in range(size)
            for j in range(size)
            if alph[1][i] <= alph[1][j]
        ]
        out += [mono([], {}, {j: 1}, ordered=orderedflag) for j in range(size)]
        out += [mono([], {}, {}, {i: 1}, ordered=orderedflag) for i in range(size)]
        return out

    for X, Y, Z in shapes:
        mx, my, mz = alph_size(X), alph_size(Y), alph_size(Z)
        # doubling coassociativity on the triple union
        U = alph_union(alph_union(X, Y), Z)
        elems = [AlgElement(U, 0, {m: Fraction(1)}, ordered) for m in gens(U, ordered)]
        for _ in range(n_random // 10):
            elems.append(_random_element(rng, U, 0, ordered))
        for elt in elems:
            one = doubling(elt, mx + my)
            lhs: dict = {}
            for (ab, c_), c in one.items():
                sub = AlgElement(alph_union(X, Y), 0, {ab: 1}, ordered)
                for (a, b), c2 in doubling(sub, mx).items():
                    k = (a, b, c_)
                    lhs[k] = lhs.get(k, 0) + c * c2
            two = doubling(elt, mx)
            rhs: dict = {}
            for (a, bc), c in two.items():
                sub = AlgElement(alph_union(Y, Z), 0, {bc: 1}, ordered)
                for (b, c_), c2 in doubling(sub, my).items():
                    k = (a, b, c_)
                    rhs[k] = rhs.get(k, 0) + c * c2
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            rep.check(lhs == rhs, "doubling coassociativity fails")

        # squaring coassociativity with weights q1 q2 q3
        q1, q2, q3 = Fraction(2), Fraction(3), Fraction(1, 2)
        P = alph_product(alph_product(X, Y), Z)
        elems = [AlgElement(P, q1 * q2 * q3, {m: Fraction(1)}, ordered) for m in gens(P, ordered)]
        for _ in range(n_random // 10):
            elems.append(_random_element(rng, P, q1 * q2 * q3, ordered))
        for elt in elems:
            lhs = {}
            for (xy, z), c in squaring(elt, mx * my, mz, q1 * q2, q3).items():
                sub = AlgElement(alph_product(X, Y), q1 * q2, {xy: 1}, ordered)
                for (x, y), c2 in squaring(sub, mx, my, q1, q2).items():
                    k = (x, y, z)
                    lhs[k] = lhs.get(k, 0) + c * c2
            rhs = {}
            for (x, yz), c in squaring(elt, mx, my * mz, q1, q2 * q3).items():
                sub = AlgElement(alph_product(Y, Z), q2 * q3, {yz: 1}, ordered)
                for (y, z), c2 in squaring(sub, my, mz, q2, q3).items():
                    k = (x, y, z)
                    rhs[k] = rhs.get(k, 0) + c * c2
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            rep.check(lhs == rhs, "squaring coassociativity fails")

        if ordered:
            continue
        # mixed diagram: (X u Y) Z = XZ u YZ on the nose; both composites
        # land in A(X) x A(Y) x A(Z)
        q1, q2 = Fraction(2), Fraction(3)
        W = alph_product(alph_union(X, Y), Z)
        elems = [AlgElement(W, q1 * q2, {m: Fraction(1)}, False) for m in gens(W, False)]
        for _ in range(n_random // 10):
            elems.append(_random_element(rng, W, q1 * q2, False))
        for elt in elems:
            lhs = {}
            for (xy, z), c in squaring(elt, mx + my, mz, q1, q2).items():
                sub = AlgElement(alph_union(X, Y), q1, {xy: 1}, False)
                for (x, y), c2 in doubling(sub, mx).items():
                    k = (x, y, z)
                    lhs[k] = lhs.get(k, 0) + c * c2
            # right route: Delta_{XZ,YZ} then squaring each leg, then
            # multiply legs 2 and 4 into the Z slot
            rhs = {}
            for (xz, yz), c in doubling(elt, mx * mz).items():
                subx = AlgElement(alph_product(X, Z), q1 * q2, {xz: 1}, False)
                suby = AlgElement(alph_product(Y, Z), q1 * q2, {yz: 1}, False)
                for (x, z1), cx in squaring(subx, mx, mz, q1, q2).items():
                    for (y, z2), cy in squaring(suby, my, mz, q1, q2).items():
                        hits, zz = mono_mul(z1, z2, False)
                        w = q2**hits
                        k = (x, y, zz)
                        rhs[k] = rhs.get(k, 0) + c * cx * cy * w
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            rep.check(lhs == rhs, "mixed doubling/squaring diagram fails")
    return rep


# ----------------------------------------------------------------- registry

def _axiom_suites(family):
    def run(ordered=False, max_vertices=3, max_edges=3, max_ext=1, **_):
        reps = [
            suite_coassoc(family, ordered, max_vertices, max_edges, max_ext),
            suite_counit(family, ordered, max_vertices, max_edges, max_ext),
            suite_compat(family, ordered, max_vertices, max_edges, max_ext),
            suite_antipode(family, ordered, max_vertices, max_edges, max_ext),
        ]
        merged = Report(f"hopf-axioms-{family}" + ("-ordered" if ordered else ""))
        for r in reps:
            merged.checks += r.checks
            merged.failures.extend(f"{r.suite}: {f}" for f in r.failures)
            merged.seconds += r.seconds
        return merged

    return run


SUITES = {
    "coassoc-fg": lambda **kw: suite_coassoc("fg", **kw),
    "coassoc-sg": lambda **kw: suite_coassoc("sg", **kw),
    "coassoc-qp": lambda **kw: suite_coassoc("qp", **kw),
    "coassoc-poset": lambda **kw: suite_coassoc("poset", **kw),
    "counit-fg": lambda **kw: suite_counit("fg", **kw),
    "counit-sg": lambda **kw: suite_counit("sg", **kw),
    "counit-qp": lambda **kw: suite_counit("qp", **kw),
    "counit-poset": lambda **kw: suite_counit("poset", **kw),
    "compat-fg": lambda **kw: suite_compat("fg", **kw),
    "compat-sg": lambda **kw: suite_compat("sg", **kw),
    "compat-qp": lambda **kw: suite_compat("qp", **kw),
    "compat-poset": lambda **kw: suite_compat("poset", **kw),
    "antipode-fg": lambda **kw: suite_antipode("fg", **kw),
    "antipode-sg": lambda **kw: suite_antipode("sg", **kw),
    "antipode-qp": lambda **kw: suite_antipode("qp", **kw),
    "antipode-poset": lambda **kw: suite_antipode("poset", **kw),
    "product-laws-fg": lambda **kw: suite_product_laws("fg", **kw),
    "hopf-axioms-fg": _axiom_suites("fg"),
    "hopf-axioms-sg": _axiom_suites("sg"),
    "hopf-axioms-qp": _axiom_suites("qp"),
    "hopf-axioms-poset": _axiom_suites("poset"),
    "cointeraction-fg": suite_cointeraction,
    "morphism-diagram": suite_morphisms,
    "oracle-products": suite_oracle_products,
    "oracle-coproducts": suite_oracle_coproducts,
    "no-cycle": suite_no_cycle,
    "duality-posets": suite_duality,
    "triangle-adjunction": suite_triangle,
    "alphabet-diagrams": suite_alphabet_diagrams,
}


def run_suite(name: str, **bounds) -> Report:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
    return SUITES[name](**bounds)
