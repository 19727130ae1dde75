import pytest

from hopfgraphs.graphs import sg
from hopfgraphs.lincomb import lc_single
from hopfgraphs.qpoly import ONE, Q, ZERO
from hopfgraphs.quasiposets import (
    basis_Delta,
    degenerate_delta,
    element,
    is_poset,
    morphism_P,
    path_order,
    poset_product_q,
    project_posets,
    qp_Delta,
    qp_canonical,
    qp_chain,
    qp_discrete,
    qp_empty,
    qp_from_json,
    qp_from_matrix,
    qp_from_pairs,
    qp_glue,
    qp_ideals,
    qp_product_q,
    qp_restrict,
    qp_to_json,
    qp_product_q as _prod,
    unit,
)

CHAIN2 = qp_chain(2)
DOT = qp_discrete(1)
MUTUAL2 = qp_from_pairs(2, [(0, 1), (1, 0)])


def test_constructors_and_validation():
    assert qp_from_matrix([[1, 1], [0, 1]]) == CHAIN2
    with pytest.raises(ValueError):
        qp_from_matrix([[1, 0], [1, 0]])  # not reflexive
    with pytest.raises(ValueError):
        qp_from_matrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])  # not transitive
    assert is_poset(CHAIN2)
    assert not is_poset(MUTUAL2)


def test_path_order():
    assert path_order(sg(3, [(0, 1), (1, 2)])) == qp_chain(3)
    two_cycle = path_order(sg(2, [(0, 1), (1, 0)]))
    assert two_cycle == MUTUAL2
    assert not is_poset(two_cycle)
    assert path_order(sg(3)) == qp_discrete(3)


def test_path_order_congruence():
    # adding the composite arrow does not change the reachability order
    assert qp_canonical(path_order(sg(3, [(0, 1), (1, 2), (0, 2)]))) == qp_canonical(
        path_order(sg(3, [(0, 1), (1, 2)]))
    )


def test_glue():
    disj = qp_glue(CHAIN2, CHAIN2, [], {})
    assert disj == qp_from_pairs(4, [(0, 1), (2, 3)])
    chain3 = qp_glue(CHAIN2, CHAIN2, [1], {1: 0})
    assert qp_canonical(chain3) == qp_canonical(qp_chain(3))
    assert qp_glue(DOT, DOT, [0], {0: 0}) == DOT


def test_ideals():
    assert len(qp_ideals(qp_chain(4))) == 5
    assert len(qp_ideals(qp_discrete(3))) == 8
    assert qp_ideals(MUTUAL2) == [(), (0, 1)]


def test_restrict():
    assert qp_restrict(qp_chain(3), [0, 2]) == CHAIN2
    assert qp_restrict(MUTUAL2, [1]) == DOT


def test_product_single_dots():
    got = qp_product_q(element(DOT), element(DOT))
    assert got == {qp_canonical(qp_discrete(2)): ONE, qp_canonical(DOT): Q}


def test_Delta_chain():
    got = qp_Delta(element(CHAIN2))
    e = qp_canonical(qp_empty())
    expect = {
        (qp_canonical(CHAIN2), e): ONE,
        (qp_canonical(DOT), qp_canonical(DOT)): ONE,
        (e, qp_canonical(CHAIN2)): ONE,
    }
    assert got == expect
    assert qp_Delta(unit()) == {(e, e): ONE}


def test_morphism_P_examples():
    a = morphism_P(lc_single(sg(3, [(0, 1), (1, 2), (0, 2)])))
    b = morphism_P(lc_single(sg(3, [(0, 1), (1, 2)])))
    assert a == b == element(qp_chain(3))
    assert morphism_P(lc_single(sg(2, [(0, 1), (1, 0)]))) == element(MUTUAL2)
    assert morphism_P(lc_single(sg(2))) == element(qp_discrete(2))


def test_poset_product_filters_mutual_classes():
    got = poset_product_q(element(DOT), element(DOT))
    assert got == {qp_canonical(qp_discrete(2)): ONE, qp_canonical(DOT): Q}
    # chains glued head-to-tail both ways create a mutual class; the poset
    # product agrees with filtering the quasi-poset product
    a, b = element(CHAIN2), element(CHAIN2)
    assert poset_product_q(a, b) == project_posets(qp_product_q(a, b))
    full = qp_product_q(a, b)
    assert any(not is_poset(k) for k in full)


def test_morphism_P_is_algebra_map_small():
    sa, sb = lc_single(sg(2, [(0, 1)])), lc_single(sg(1))
    from hopfgraphs.hopf_sg import sg_product_q

    lhs = morphism_P(sg_product_q(sa, sb))
    rhs = qp_product_q(morphism_P(sa), morphism_P(sb))
    assert lhs == rhs


def test_degenerate_delta():
    got = degenerate_delta(CHAIN2)
    assert got == {(qp_canonical(CHAIN2), qp_discrete(2)): ONE}
    # right counit with counit 1 on discrete posets; no left counit since a
    # nondiscrete poset never appears in the right leg
    (left, right), = got.keys()
    assert right == qp_discrete(2)
    assert left == qp_canonical(CHAIN2)


def test_json_roundtrip():
    assert qp_from_json(qp_to_json(MUTUAL2)) == MUTUAL2
    assert qp_from_json(qp_to_json(qp_chain(3))) == qp_chain(3)


def test_ordered_mode_glue_keeps_labels():
    a = qp_chain(2, ordered=True)
    b = qp_discrete(1, ordered=True)
    got = qp_glue(a, b, [], {})
    assert got == qp_from_pairs(3, [(0, 1)], ordered=True)
    assert qp_canonical(got) == got
