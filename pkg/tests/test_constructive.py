from fractions import Fraction

import pytest

from cycleiso.constructive import (
    TRACE_LABELS,
    bound_value,
    classify_component,
    construct,
    is_c4_graph,
)
from cycleiso.family import Tree, build
from cycleiso.graphs import from_edge_list, mask_of
from cycleiso.isolation import iota_exact, verify
from util import c4_plus, complete, cycle, diamond, disjoint_union, path

K13_PLUS = Tree(5, ((0, 1), (0, 2), (0, 3), (1, 4)))


def test_bound_value():
    assert bound_value(5) == 1
    assert bound_value(29) == 5
    assert bound_value(6) == Fraction(7, 6)
    with pytest.raises(ValueError):
        bound_value(-1)


def test_classify():
    assert classify_component(cycle(4)).tag == "C4"
    assert classify_component(diamond()).tag == "diamond"
    cls = classify_component(c4_plus())
    assert cls.tag == "extremal" and cls.decomposition is not None
    assert classify_component(complete(5)).tag == "other"


def test_classify_rejects_disconnected():
    with pytest.raises(ValueError):
        classify_component(disjoint_union(cycle(3), cycle(3)))


def test_construct_c4_free_graph():
    d, trace = construct(path(7))
    assert d == 0
    assert trace.labels == ("base:no-C4",)


def test_construct_diamond():
    d, trace = construct(diamond())
    assert d.bit_count() == 1
    assert trace.labels == ("base:m<=5",)
    assert verify(diamond(), d, 4).valid


def test_construct_k4_hits_its_branch():
    d, trace = construct(complete(4))
    assert d.bit_count() == 1
    assert trace.labels == ("Case 1:K4",)


def test_construct_rejects_c4():
    with pytest.raises(ValueError):
        construct(cycle(4))
    with pytest.raises(ValueError):
        construct(disjoint_union(cycle(4), diamond()))


def test_construct_flagship_extremal_graph():
    g, _ = build(K13_PLUS, 4)
    d, trace = construct(g)
    assert d.bit_count() == 5 == bound_value(g.m)
    assert verify(g, d, 4).valid
    assert not trace.used_fallback()


def test_construct_disconnected_sums_components():
    g = disjoint_union(diamond(), complete(4))
    d, trace = construct(g)
    assert d.bit_count() == 2
    assert verify(g, d, 4).valid


def test_trace_increments_union_is_output():
    g, _ = build(Tree(3, ((0, 1), (1, 2))), 4)
    d, trace = construct(g)
    assert trace.increments_union() == d


def test_trace_labels_are_known(universe7):
    for g in universe7:
        if is_c4_graph(g):
            continue
        _, trace = construct(g)
        assert set(trace.labels) <= TRACE_LABELS


def test_exhaustive_soundness_n7(universe7):
    for g in universe7:
        if is_c4_graph(g):
            continue
        d, trace = construct(g)
        size = d.bit_count()
        assert verify(g, d, 4).valid
        assert size <= (g.m + 1) // 6
        assert size >= iota_exact(g, 4).iota
        assert not trace.used_fallback()


def test_equality_cases_n7(universe7):
    attained = [
        g
        for g in universe7
        if not is_c4_graph(g) and iota_exact(g, 4).iota == bound_value(g.m)
    ]
    shapes = sorted((g.n, g.m) for g in attained)
    assert shapes == [(4, 5), (5, 5)]


def test_members_get_their_canonical_set():
    from cycleiso.family import enumerate_trees, recognize

    for n in range(1, 5):
        for tree in enumerate_trees(n):
            g, decomp = build(tree, 4)
            d, trace = construct(g)
            assert d == decomp.connection_vertices
            assert not trace.used_fallback()
            member_labels = [lab for lab in trace.labels if lab.endswith(":member")]
            if member_labels:
                assert recognize(g, 4) is not None
                assert d == recognize(g, 4).connection_vertices


def test_case2_star_bridge():
    # star K_{1,4} with a leaf tied to a K4 (not a special component)
    g = from_edge_list(
        9,
        [(0, 1), (0, 2), (0, 3), (0, 4),
         (4, 5),
         (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)],
    )
    d, trace = construct(g)
    assert verify(g, d, 4).valid
    assert d.bit_count() <= g.m // 6
    assert "Case 2:star-bridge" in trace.labels


def test_case2_special_component_peeled():
    # star K_{1,4} with a leaf tied to a diamond: the diamond is peeled as a
    # special component through the single-attachment subcase
    g = from_edge_list(
        9,
        [(0, 1), (0, 2), (0, 3), (0, 4),
         (4, 5),
         (5, 6), (6, 7), (7, 8), (8, 5), (6, 8)],
    )
    d, trace = construct(g)
    assert verify(g, d, 4).valid
    assert d.bit_count() <= g.m // 6
    assert trace.labels[0].startswith("Subcase 2.1")


def _assert_sound(g, expect_label=None):
    d, trace = construct(g)
    assert verify(g, d, 4).valid
    assert d.bit_count() <= (g.m + 1) // 6
    assert not trace.used_fallback()
    if expect_label is not None:
        assert trace.labels[0] == expect_label, trace.labels
    return d, trace


def test_two_squares_double_bridge():
    g = from_edge_list(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
         (0, 4), (1, 5)],
    )
    d, _ = _assert_sound(g, "Subcase 1.2.2:G'=C4")
    assert d.bit_count() == 1


def test_two_squares_triple_bridge():
    g = from_edge_list(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
         (0, 4), (1, 5), (2, 6)],
    )
    d, _ = _assert_sound(g, "Subcase 1.2.3:G'=C4")
    assert d.bit_count() == 1


def test_cube_needs_two():
    g = from_edge_list(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
         (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    d, _ = _assert_sound(g, "Subcase 1.2.4:G'=C4")
    # a single closed neighbourhood leaves a claw, so the exact value is 1;
    # the construction returns 2, still within floor((12+1)/6)
    assert d.bit_count() == 2
    assert iota_exact(g, 4).iota == 1


def test_square_tied_to_member_by_two_cycle_edges():
    cp, _ = build(Tree(1, ()), 4)
    edges = cp.edges() + [(5, 6), (6, 7), (7, 8), (8, 5), (2, 5), (3, 6)]
    _assert_sound(from_edge_list(9, edges), "Subcase 1.2.2(i)")


def test_square_tied_to_member_by_three_cycle_edges():
    cp, _ = build(Tree(1, ()), 4)
    edges = cp.edges() + [(5, 6), (6, 7), (7, 8), (8, 5), (2, 5), (3, 6), (4, 7)]
    _assert_sound(from_edge_list(9, edges), "Subcase 1.2.3(i)")


def test_member_cycle_with_full_boundary():
    cp, _ = build(Tree(1, ()), 4)
    edges = cp.edges() + [(5, 6), (6, 7), (7, 8), (8, 5),
                          (2, 5), (3, 6), (4, 7), (0, 8)]
    _assert_sound(from_edge_list(9, edges), "Subcase 1.2.4(i)")


def test_diamond_span_with_two_square_components():
    g = from_edge_list(
        12,
        [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3),
         (4, 5), (5, 6), (6, 7), (7, 4),
         (8, 9), (9, 10), (10, 11), (11, 8),
         (0, 4), (2, 8)],
    )
    d, _ = _assert_sound(g, "Subcase 1.1(i)")
    assert d.bit_count() == 2


def test_high_degree_member_hits_membership_branch():
    star = Tree(4, ((0, 1), (0, 2), (0, 3)))
    g, decomp = build(star, 4)
    d, trace = _assert_sound(g, "Subcase 2.1(i):member")
    assert d.bit_count() == decomp.tree_size == 4


def test_refined_peel_with_diamond_remainder():
    # vertex 0 ties a 4-cycle to a diamond whose apex is the unique
    # maximum-degree vertex; {0} alone suffices
    g = from_edge_list(
        9,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 1),
         (5, 6), (6, 7), (7, 8), (8, 5), (6, 8),
         (0, 6)],
    )
    d, _ = _assert_sound(g, "Subcase 2.1(i)")
    assert d.bit_count() == 1 == g.m // 6


def test_refined_peel_with_stray_attachment():
    # three cycles on a star tree, plus an extra pendant-cycle piece tied to
    # a leaf at one of the piece's cycle vertices: the anchor of the tie
    # point is dropped since the tie point itself is already covered
    base, _ = build(Tree(4, ((0, 1), (0, 2), (0, 3))), 4)
    piece, _ = build(Tree(1, ()), 4)
    off = base.n
    edges = base.edges() + [(off + u, off + v) for u, v in piece.edges()]
    edges.append((1, off + 2))
    g = from_edge_list(off + 5, edges)
    d, trace = _assert_sound(g, "Subcase 2.1(i)")
    assert d.bit_count() == 4 == g.m // 6


def test_rescue_branch_star_over_square():
    # K_{1,4} tied to a 4-cycle by three edges into distinct leaves: one
    # well-placed cycle vertex isolates everything
    g = from_edge_list(
        9,
        [(0, 1), (0, 2), (0, 3), (0, 4),
         (5, 6), (6, 7), (7, 8), (8, 5),
         (1, 5), (2, 6), (3, 7)],
    )
    d, trace = _assert_sound(g)
    assert "Subcase 2.2(i):rescue" in trace.labels
    assert d.bit_count() == 1 == g.m // 6


def test_big_combined_graph_stays_sound():
    # several family members tied into one big graph through a hub path
    t1, _ = build(Tree(2, ((0, 1),)), 4)
    base = disjoint_union(t1, diamond())
    edges = base.edges() + [(0, base.n - 1)]
    g = from_edge_list(base.n, edges)
    d, trace = construct(g)
    assert verify(g, d, 4).valid
    assert d.bit_count() <= (g.m + 1) // 6
    assert not trace.used_fallback()
