import math

import pytest

from gaindex.errors import BadParams
from gaindex.families import (
    FamilyKind, FamilySpec, Verdict, canonical_mask, compare_families, construct_complete_bipartite,
    construct_example_210, construct_gdd, construct_h_delta, construct_two_hub, ga1_closed_form_gdd,
    ga1_closed_form_hdelta, ga1_closed_form_kdd, gdd_case, gdd_membership, is_isomorphic, min_edges,
    minimal_graph_ranges, ratio_exceeds_threshold,
)
from gaindex.graph import Graph, complete_graph, degree_summary, from_edge_list, is_connected, star_graph
from gaindex.index import ga1

DIAMOND = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])


def test_membership_examples():
    assert gdd_membership(complete_graph(4), 3, 3).kind is FamilyKind.GDD_case1
    assert gdd_membership(DIAMOND, 2, 3).kind is FamilyKind.GDD_case4
    assert gdd_membership(C5, 2, 2) is None


def test_case_selection():
    assert gdd_case(3, 3) is FamilyKind.GDD_case1
    assert gdd_case(2, 4) is FamilyKind.GDD_case2
    assert gdd_case(2, 5) is FamilyKind.GDD_case3
    assert gdd_case(2, 3) is FamilyKind.GDD_case4


def test_construct_examples():
    assert is_isomorphic(construct_gdd(1, 5), star_graph(5))
    assert is_isomorphic(construct_gdd(2, 3), DIAMOND)
    assert construct_gdd(3, 3) == complete_graph(4)


def test_construct_gdd_grid():
    for Delta in range(1, 31):
        for delta in range(1, Delta + 1):
            g = construct_gdd(delta, Delta)
            spec = gdd_membership(g, delta, Delta)
            assert spec is not None and spec.kind is gdd_case(delta, Delta)
            assert is_connected(g)
            assert g.m == min_edges(delta, Delta)
            assert abs(ga1(g) - ga1_closed_form_gdd(delta, Delta)) <= 1e-9


def test_complete_bipartite():
    assert is_isomorphic(construct_complete_bipartite(1, 3), star_graph(3))
    assert construct_complete_bipartite(2, 3).m == 6
    assert construct_complete_bipartite(4, 56).m == 224
    for d, D in ((1, 1), (2, 3), (3, 7), (4, 56)):
        assert abs(ga1(construct_complete_bipartite(d, D)) - ga1_closed_form_kdd(d, D)) <= 1e-9


def test_h_delta():
    assert is_isomorphic(construct_h_delta(3), DIAMOND)
    assert construct_h_delta(29).m == 57
    with pytest.raises(BadParams):
        construct_h_delta(4)
    for D in range(3, 42, 2):
        assert abs(ga1(construct_h_delta(D)) - ga1_closed_form_hdelta(D)) <= 1e-9


def test_example_210_shape():
    g = construct_example_210()
    degs = g.degrees
    census = {}
    for u, v in g.edges():
        key = tuple(sorted((degs[u], degs[v])))
        census[key] = census.get(key, 0) + 1
    assert census == {(56, 56): 1, (4, 56): 110, (4, 4): 55}


def test_two_hub():
    assert is_isomorphic(construct_two_hub(4, 56), construct_example_210())
    with pytest.raises(BadParams):
        construct_two_hub(3, 6)
    s = degree_summary(construct_two_hub(4, 10))
    assert s.degree_multiset == (4,) * 9 + (10, 10)
    for d, D in ((3, 7), (5, 9), (6, 8), (5, 13)):
        s = degree_summary(construct_two_hub(d, D))
        assert (s.delta, s.Delta) == (d, D)
    for bad in ((2, 9), (5, 6), (5, 12)):
        with pytest.raises(BadParams):
            construct_two_hub(*bad)


def test_min_edges_and_ranges():
    assert min_edges(4, 56) == 140
    assert min_edges(2, 3) == 5
    assert min_edges(1, 7) == 7
    assert minimal_graph_ranges(2, 3) == (5, 6, 4, 5)
    assert minimal_graph_ranges(1, 9) == (9, 9, 10, 10)
    assert minimal_graph_ranges(4, 56) == (140, 224, 57, 99)


def test_closed_form_values():
    assert ga1_closed_form_gdd(4, 56) == pytest.approx(112 * math.sqrt(224) / 60 + 84, abs=1e-9)
    assert ga1_closed_form_gdd(4, 56) == pytest.approx(111.9377, abs=5e-5)
    assert ga1_closed_form_gdd(2, 3) == pytest.approx(8 * math.sqrt(6) / 5 + 1, abs=1e-12)
    assert ga1_closed_form_gdd(3, 3) == pytest.approx(6, abs=1e-12)
    assert ga1_closed_form_kdd(4, 56) == pytest.approx(111.7508, abs=5e-5)
    assert ga1_closed_form_kdd(1, 1) == pytest.approx(1, abs=1e-12)
    assert ga1_closed_form_hdelta(3) == pytest.approx(ga1_closed_form_gdd(2, 3), abs=1e-12)
    assert ga1_closed_form_hdelta(29) == pytest.approx(28.515051221185733, abs=1e-9)
    assert ga1_closed_form_hdelta(27) == pytest.approx(27.35313102580523, abs=1e-9)
    assert ga1_closed_form_kdd(2, 29) == pytest.approx(28.497731621942368, abs=1e-9)


def test_compare_families():
    assert compare_families(2, 28) is Verdict.GDD_GREATER
    assert compare_families(2, 4) is Verdict.K_GREATER
    assert compare_families(4, 56) is Verdict.GDD_GREATER
    with pytest.raises(BadParams):
        compare_families(1, 5)


def test_compare_agrees_with_closed_forms():
    for delta in range(2, 12):
        for Delta in range(delta, 200):
            v = compare_families(delta, Delta)
            diff = ga1_closed_form_gdd(delta, Delta) - ga1_closed_form_kdd(delta, Delta)
            if v is Verdict.GDD_GREATER:
                assert diff > 0
            elif v is Verdict.K_GREATER:
                assert diff <= 1e-9
            r = Delta / delta
            assert ratio_exceeds_threshold(delta, Delta) == (r > 7 + 4 * math.sqrt(3))


def test_family_spec_contains():
    assert FamilySpec(FamilyKind.Star, 1, 3).contains(star_graph(3))
    assert FamilySpec(FamilyKind.Complete, 3, 3).contains(complete_graph(4))
    assert FamilySpec(FamilyKind.CompleteBipartite, 2, 3).contains(construct_complete_bipartite(2, 3))
    assert not FamilySpec(FamilyKind.CompleteBipartite, 2, 3).contains(DIAMOND)
    assert FamilySpec(FamilyKind.GDD_case4, 2, 3).contains(DIAMOND)
    assert FamilySpec(FamilyKind.TwoHub, 4, 56).contains(construct_example_210())


def test_canonical_mask_invariant():
    g = construct_gdd(2, 5)
    perm = [3, 0, 5, 1, 4, 2]
    h = from_edge_list(6, [(perm[u], perm[v]) for u, v in g.edges()])
    assert canonical_mask(g) == canonical_mask(h)
    assert canonical_mask(g) != canonical_mask(Graph.from_mask(6, canonical_mask(construct_gdd(3, 5))))
