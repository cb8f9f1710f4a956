import math

import pytest

from gaindex.bounds import (
    BoundId, GateState, all_bounds, applicability_cor_2_15, best_lower_bound, best_lower_bound_for_graph,
    bound_cor_2_13, bound_cor_2_14, bound_cor_2_15, bound_cor_2_16, bound_cor_2_17, bound_thm_2_7,
    bound_thm_2_11, bound_thm_2_20, condition_2_3, condition_2_5, gap_form, lemma_2_18_holds,
    lemma_2_19_holds, lemma_a, lemma_b, odd_clause_holds, poly_P, sufficient_condition_2_12,
)
from gaindex.errors import BadParams, NotApplicable
from gaindex.families import FamilyKind, construct_complete_bipartite, ga1_closed_form_gdd, ga1_closed_form_kdd
from gaindex.graph import from_edge_list
from gaindex.index import ga1

ROOTS = [(1, 1.3), (2, 2.7), (3, 3.8), (4, 4.8), (5, 5.9), (5, 8.1), (6, 6.9), (6, 8), (7, 7.9), (7, 8.6)]


def test_thm_2_7():
    assert bound_thm_2_7(4, 56).value == pytest.approx(280 * math.sqrt(224) / 60, abs=1e-9)
    assert bound_thm_2_7(4, 56).value == pytest.approx(69.8443, abs=5e-5)
    r = bound_thm_2_7(1, 3)
    assert r.value == pytest.approx(3 * math.sqrt(3) / 2, abs=1e-12)
    assert r.equality_family.kind is FamilyKind.Star
    assert ga1(construct_complete_bipartite(1, 3)) == pytest.approx(r.value, abs=1e-12)
    r = bound_thm_2_7(2, 3)
    assert r.theorem_id is BoundId.T2_7_odd
    assert r.value == pytest.approx(2 * math.sqrt(6), abs=1e-12)
    assert bound_thm_2_7(2, 3, refine=False).theorem_id is BoundId.T2_7
    assert bound_thm_2_7(4, 4).equality_family.kind is FamilyKind.Complete


def test_condition_2_3():
    assert all(condition_2_3(1, D) for D in range(2, 300))
    assert condition_2_3(2, 3)
    assert not condition_2_3(4, 56)
    for d in range(1, 40):
        for D in range(max(d, 2), 120):
            eps = 2 * math.sqrt(d * D) / (d + D)
            k = D * (d - 1)
            assert condition_2_3(d, D) == (eps >= k / (k + 2) - 1e-15) or abs(eps - k / (k + 2)) < 1e-12


def test_condition_2_5():
    assert condition_2_5(2, 3)
    with pytest.raises(NotApplicable):
        condition_2_5(2, 4)
    # (2,5): the ratio gate passes, so the outcome is the odd clause itself
    assert condition_2_3(2, 5)
    assert condition_2_5(2, 5) == odd_clause_holds(2, 5)


def test_sufficient_condition():
    assert sufficient_condition_2_12(2, 3)
    assert not sufficient_condition_2_12(2, 27)
    lhs = 4 * (1 - 2 * math.sqrt(20) / 9)
    rhs = 1.5 * (1 - 2 * math.sqrt(20) / 9)
    assert sufficient_condition_2_12(4, 5) == (lhs >= rhs)
    with pytest.raises(NotApplicable):
        sufficient_condition_2_12(2, 4)


def test_sufficient_implies_clause():
    for d in range(1, 30):
        for D in range(d + 1, 120):
            if D * (d + 1) % 2 and sufficient_condition_2_12(d, D):
                assert odd_clause_holds(d, D)


def test_thm_2_11():
    r = bound_thm_2_11(2, 3)
    assert r.value == pytest.approx(8 * math.sqrt(6) / 5 + 1, abs=1e-12)
    assert r.equality_family.kind is FamilyKind.GDD_case4
    r = bound_thm_2_11(2, 2)
    assert r.value == pytest.approx(3, abs=1e-12)
    assert not bound_thm_2_11(4, 56).applicable
    with pytest.raises(BadParams):
        bound_thm_2_11(1, 1)


def test_thm_2_11_matches_closed_form():
    for D in range(2, 60):
        for d in range(1, D + 1):
            r = bound_thm_2_11(d, D)
            if r.applicable:
                assert abs(r.value - ga1_closed_form_gdd(d, D)) <= 1e-9
            else:
                assert r.gate in (GateState.FAILS, GateState.BOUNDARY)


def test_poly():
    D = 7
    assert poly_P(1, D) == 15 * D ** 3 - 44 * D ** 2 + 44 * D - 16
    assert poly_P(4, 5) == 16
    assert poly_P(5, 9) == -233
    assert poly_P(5, 8) == 16
    assert poly_P(6, 9) == -384
    assert poly_P(6, 8) == 0


def test_gate_equivalence():
    for h in range(8):
        for D in range(max(2, h + 1), 201):
            assert applicability_cor_2_15(h, D) == (poly_P(h, D) >= 0), (h, D)


def test_root_table():
    for h, r in ROOTS:
        lo, hi = poly_P(h, r - 0.05), poly_P(h, r + 0.05)
        assert (lo > 0) != (hi > 0), (h, r)


def test_cor_2_14_and_2_15():
    r = bound_cor_2_14(4, 5)
    assert r.value == pytest.approx(12.469039949999534, abs=1e-9)
    assert bound_cor_2_14(3, 8).applicable
    assert not bound_cor_2_14(3, 9).applicable
    assert applicability_cor_2_15(5, 8)
    assert not applicability_cor_2_15(5, 9)
    assert applicability_cor_2_15(7, 8)
    for bad in ((-1, 5), (3, 1), (4, 4)):
        with pytest.raises(BadParams):
            applicability_cor_2_15(*bad)
    for D in range(2, 40):
        for d in range(1, D + 1):
            r = bound_cor_2_15(d, D)
            if r.applicable:
                assert r.value == gap_form(D - d, D)
            t = bound_thm_2_11(d, D)
            if D * (d + 1) % 2 == 0 and t.applicable:
                assert abs(gap_form(D - d, D) - t.value) <= 1e-9


def test_cor_2_16():
    assert bound_cor_2_16(3).value == pytest.approx(8 * math.sqrt(6) / 5 + 1, abs=1e-12)
    assert bound_cor_2_16(4).value == pytest.approx(7.958973274443148, abs=1e-12)
    assert bound_cor_2_16(2).value == pytest.approx(1.885618083164127, abs=1e-12)
    for D in range(2, 80):
        assert abs(bound_cor_2_16(D).value - ga1_closed_form_gdd(D - 1, D)) <= 1e-9


def test_cor_2_13_and_2_17():
    assert bound_cor_2_13(2, 3).value == pytest.approx(8 * math.sqrt(6) / 5 + 1, abs=1e-12)
    assert bound_cor_2_17(2, 8).value == pytest.approx(10.4, abs=1e-12)
    with pytest.raises(NotApplicable):
        bound_cor_2_17(3, 9)
    with pytest.raises(NotApplicable):
        bound_cor_2_13(2, 5)


def test_lemmas():
    assert lemma_2_18_holds(28, 28)
    assert lemma_a(27) == pytest.approx(0.17254145975781918, abs=1e-12)
    assert lemma_b(30) == pytest.approx(0.1711632992203644, abs=1e-12)
    assert lemma_2_19_holds(2, 30)
    for a in range(1, 60):
        for D in range(a, 120):
            lhs = 2 * math.sqrt(a * D) / (D + a)
            rhs = 2 * 2 * math.sqrt(2 * D) / (D + 2)
            if abs(lhs - rhs) > 1e-12:
                assert lemma_2_18_holds(a, D) == (lhs > rhs)


def test_thm_2_20():
    assert bound_thm_2_20(28).value == pytest.approx(27.937708487912097, abs=1e-9)
    assert bound_thm_2_20(28).value == pytest.approx(ga1_closed_form_kdd(2, 28), abs=1e-9)
    assert bound_thm_2_20(56).value == pytest.approx(40.872296115756434, abs=1e-9)
    assert bound_thm_2_20(40).equality_family.kind is FamilyKind.CompleteBipartite
    with pytest.raises(NotApplicable):
        bound_thm_2_20(27)


def test_best_lower_bound_examples():
    r = best_lower_bound(2, 3)
    assert r.theorem_id is BoundId.T2_11_odd
    assert r.value == pytest.approx(4.9192, abs=5e-5)
    r = best_lower_bound(4, 56)
    assert r.theorem_id is BoundId.T2_7
    assert r.value == pytest.approx(69.8443, abs=5e-5)
    r = best_lower_bound(2, 30)
    assert r.theorem_id is BoundId.T2_20
    assert r.value == pytest.approx(29.047375096555626, abs=1e-9)
    assert bound_thm_2_7(2, 30).value == pytest.approx(21.78553132241672, abs=1e-9)


def test_all_bounds_rows():
    rows = all_bounds(3, 5)
    assert [r.theorem_id for r in rows] == list(BoundId)
    assert not rows[-1].applicable
    assert all_bounds(3, 5, m=9)[-1].applicable
    with pytest.raises(BadParams):
        all_bounds(0, 3)


def test_best_for_graph():
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert best_lower_bound_for_graph(c4).value <= ga1(c4)
    with pytest.raises(BadParams):
        best_lower_bound_for_graph(from_edge_list(3, [(0, 1)]))
