"""Lower bounds on GA1 in terms of the minimum and maximum degree.

Every bound comes with its applicability gate.  Gates that reduce to
integer arithmetic are decided exactly; gates that keep square roots are
evaluated in floating point and report ``GateState.BOUNDARY`` when the two
sides are closer than ``GATE_SLACK``, in which case the bound is withheld.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import BadParams, EmptyGraph, NotApplicable
from .families import FamilyKind, FamilySpec, gdd_family
from .graph import Graph, degree_summary
from .index import TOL, classic_bounds

GATE_SLACK = 1e-12


class BoundId(str, enum.Enum):
    T2_7 = "T2_7"
    T2_7_odd = "T2_7_odd"
    T2_11_even = "T2_11_even"
    T2_11_odd = "T2_11_odd"
    C2_13 = "C2_13"
    C2_14 = "C2_14"
    C2_15 = "C2_15"
    C2_16 = "C2_16"
    C2_17 = "C2_17"
    T2_20 = "T2_20"
    CLASSIC_2_1 = "CLASSIC_2_1"


_ORDER = {b: i for i, b in enumerate(BoundId)}


class GateState(str, enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    BOUNDARY = "BOUNDARY"


def _gate(diff: float) -> GateState:
    if diff > GATE_SLACK:
        return GateState.HOLDS
    if diff < -GATE_SLACK:
        return GateState.FAILS
    return GateState.BOUNDARY


@dataclass(frozen=True)
class BoundResult:
    theorem_id: BoundId
    value: float | None
    applicable: bool
    equality_family: FamilySpec | None = None
    notes: str = ""
    gate: GateState | None = None


def _na(tid: BoundId, notes: str, gate: GateState | None = None) -> BoundResult:
    return BoundResult(tid, None, False, None, notes, gate)


def _check(delta: int, Delta: int, min_Delta: int = 1) -> None:
    if not 1 <= delta <= Delta or Delta < min_Delta:
        raise BadParams(f"need 1 <= delta <= Delta and Delta >= {min_Delta}, got ({delta}, {Delta})")


def _ratio(delta: int, Delta: int) -> float:
    return 2 * math.sqrt(delta * Delta) / (delta + Delta)


def _odd(delta: int, Delta: int) -> bool:
    return Delta * (delta + 1) % 2 == 1


def even_form(delta: int, Delta: int) -> float:
    """Delta * eps + Delta (delta - 1) / 2 with eps the extreme-degree edge weight."""
    return Delta * _ratio(delta, Delta) + Delta * (delta - 1) / 2


def odd_form(delta: int, Delta: int) -> float:
    return ((Delta - 1) * _ratio(delta, Delta) + _ratio(delta + 1, Delta)
            + delta * _ratio(delta, delta + 1) + ((Delta - 2) * (delta - 1) - 1) / 2)


# -- edge-count bound ---------------------------------------------------------

def bound_thm_2_7(delta: int, Delta: int, refine: bool = True) -> BoundResult:
    """Minimum edge count times the extreme edge weight.

    With ``refine`` and Delta (delta + 1) odd the edge count rounds up by
    one half, giving the ``T2_7_odd`` value.
    """
    _check(delta, Delta)
    half_edges = Delta * (delta + 1)
    if refine and half_edges % 2:
        value = (half_edges + 1) * math.sqrt(delta * Delta) / (delta + Delta)
        return BoundResult(BoundId.T2_7_odd, value, True, None, "odd degree product; rounded-up edge count")
    family = None
    if delta == 1:
        family = FamilySpec(FamilyKind.Star, 1, Delta)
    elif delta == Delta:
        family = FamilySpec(FamilyKind.Complete, Delta, Delta)
    value = half_edges * math.sqrt(delta * Delta) / (delta + Delta)
    return BoundResult(BoundId.T2_7, value, True, family)


# -- gates -------------------------------------------------------------------

def condition_2_3(delta: int, Delta: int) -> bool:
    """eps >= Delta (delta - 1) / (Delta (delta - 1) + 2), decided in integers by squaring."""
    _check(delta, Delta, min_Delta=2)
    k = Delta * (delta - 1)
    return 4 * delta * Delta * (k + 2) ** 2 >= k * k * (delta + Delta) ** 2


def _odd_clause_diff(delta: int, Delta: int) -> float:
    lhs = 1.5 * _ratio(delta, Delta) + delta - 0.5
    rhs = _ratio(delta + 1, Delta) + delta * _ratio(delta, delta + 1)
    return lhs - rhs


def gate_2_5(delta: int, Delta: int) -> GateState:
    _check(delta, Delta, min_Delta=2)
    if not _odd(delta, Delta):
        raise NotApplicable(f"odd-case gate needs Delta (delta + 1) odd, got ({delta}, {Delta})")
    if not condition_2_3(delta, Delta):
        return GateState.FAILS
    return _gate(_odd_clause_diff(delta, Delta))


def condition_2_5(delta: int, Delta: int) -> bool:
    return gate_2_5(delta, Delta) is GateState.HOLDS


def odd_clause_holds(delta: int, Delta: int) -> bool:
    """Second clause of the odd-case gate on its own (no ratio condition)."""
    return _gate(_odd_clause_diff(delta, Delta)) is GateState.HOLDS


def gate_2_12(delta: int, Delta: int) -> GateState:
    _check(delta, Delta)
    if not _odd(delta, Delta):
        raise NotApplicable(f"sufficient condition needs Delta (delta + 1) odd, got ({delta}, {Delta})")
    lhs = delta * (1 - _ratio(delta, delta + 1))
    rhs = 1.5 * (1 - _ratio(delta, Delta))
    return _gate(lhs - rhs)


def sufficient_condition_2_12(delta: int, Delta: int) -> bool:
    return gate_2_12(delta, Delta) is GateState.HOLDS


# -- near-regular bounds -----------------------------------------------------

def bound_thm_2_11(delta: int, Delta: int) -> BoundResult:
    _check(delta, Delta, min_Delta=2)
    if not _odd(delta, Delta):
        if condition_2_3(delta, Delta):
            return BoundResult(BoundId.T2_11_even, even_form(delta, Delta), True,
                               gdd_family(delta, Delta), gate=GateState.HOLDS)
        return _na(BoundId.T2_11_even, "ratio gate fails", GateState.FAILS)
    state = gate_2_5(delta, Delta)
    if state is GateState.HOLDS:
        return BoundResult(BoundId.T2_11_odd, odd_form(delta, Delta), True, gdd_family(delta, Delta), gate=state)
    note = "odd-case gate within rounding slack; withheld" if state is GateState.BOUNDARY else "odd-case gate fails"
    return _na(BoundId.T2_11_odd, note, state)


def poly_P(h: int, Delta: int | float) -> int | float:
    """Applicability polynomial in Delta for a degree gap h = Delta - delta."""
    if h < 0:
        raise BadParams(f"degree gap must be >= 0, got {h}")
    D = Delta
    return ((16 - h * h) * D ** 3 + (2 * h ** 3 + 2 * h * h - 32 * h - 16) * D * D
            + (-h ** 4 - 2 * h ** 3 + 15 * h * h + 16 * h + 16) * D - 16 * h)


def gap_form(h: int, Delta: int) -> float:
    return 2 * Delta * math.sqrt(Delta * (Delta - h)) / (2 * Delta - h) + Delta * (Delta - h - 1) / 2


def _near_regular_family(delta: int, Delta: int) -> FamilySpec | None:
    # equality only in the even case, through the ratio-gated bound
    return None if _odd(delta, Delta) else gdd_family(delta, Delta)


def bound_cor_2_14(delta: int, Delta: int) -> BoundResult:
    _check(delta, Delta, min_Delta=2)
    h = Delta - delta
    if poly_P(h, Delta) >= 0:
        return BoundResult(BoundId.C2_14, gap_form(h, Delta), True, _near_regular_family(delta, Delta),
                           f"gap h={h}", GateState.HOLDS)
    return _na(BoundId.C2_14, f"polynomial negative at h={h}", GateState.FAILS)


def applicability_cor_2_15(h: int, Delta: int) -> bool:
    if h < 0 or Delta < 2 or Delta <= h:
        raise BadParams(f"need h >= 0, Delta >= 2 and Delta > h, got (h={h}, Delta={Delta})")
    if h <= 1:
        return True
    if h <= 4:
        return Delta >= h + 1
    if h == 5:
        return Delta in (6, 7, 8)
    if h == 6:
        return Delta in (7, 8)
    return Delta == h + 1


def bound_cor_2_15(delta: int, Delta: int) -> BoundResult:
    _check(delta, Delta, min_Delta=2)
    h = Delta - delta
    if applicability_cor_2_15(h, Delta):
        return BoundResult(BoundId.C2_15, gap_form(h, Delta), True, _near_regular_family(delta, Delta),
                           f"gap h={h}", GateState.HOLDS)
    return _na(BoundId.C2_15, f"gap h={h} outside the tabulated range", GateState.FAILS)


def bound_cor_2_16(Delta: int) -> BoundResult:
    if Delta < 2:
        raise BadParams(f"need Delta >= 2, got {Delta}")
    root = math.sqrt(Delta * (Delta - 1))
    if Delta % 2 == 0:
        value = 2 * Delta * root / (2 * Delta - 1) + Delta * (Delta - 2) / 2
    else:
        value = 4 * (Delta - 1) * root / (2 * Delta - 1) + ((Delta - 2) ** 2 - 1) / 2 + 1
    return BoundResult(BoundId.C2_16, value, True, gdd_family(Delta - 1, Delta), "delta = Delta - 1")


def bound_cor_2_17(delta: int, Delta: int) -> BoundResult:
    _check(delta, Delta)
    if not 2 <= Delta <= 8:
        raise NotApplicable(f"small-degree bound needs 2 <= Delta <= 8, got {Delta}")
    return BoundResult(BoundId.C2_17, even_form(delta, Delta), True, _near_regular_family(delta, Delta))


def bound_cor_2_13(delta: int, Delta: int) -> BoundResult:
    _check(delta, Delta)
    if Delta > 4:
        raise NotApplicable(f"molecular bound needs Delta <= 4, got {Delta}")
    if (delta, Delta) == (2, 3):
        value = odd_form(2, 3)
    else:
        value = even_form(delta, Delta)
    return BoundResult(BoundId.C2_13, value, True, gdd_family(delta, Delta), "molecular graphs")


# -- minimum degree two, large maximum degree -------------------------------

def lemma_a(b: float) -> float:
    return (b - 1) / ((b + 2) * math.sqrt(b))


def lemma_b(Delta: float) -> float:
    return math.sqrt(Delta) / (Delta + 2)


def lemma_2_18_holds(a: int, Delta: int) -> bool:
    """Weight of an (a, Delta) edge beats twice the weight of a (2, Delta) edge; exact."""
    if a < 1 or Delta < 1:
        raise BadParams(f"positive integers required, got ({a}, {Delta})")
    return a * (Delta + 2) ** 2 > 8 * (Delta + a) ** 2


def lemma_2_19_holds(b: int, Delta: int) -> bool:
    """(b-1) (2,b)-edges outweigh b (2,Delta)-edges; compared as A(b) > B(Delta) squared out."""
    if b < 1 or Delta < 1:
        raise BadParams(f"positive integers required, got ({b}, {Delta})")
    return (b - 1) ** 2 * (Delta + 2) ** 2 > b * Delta * (b + 2) ** 2


def bound_thm_2_20(Delta: int) -> BoundResult:
    if Delta < 28:
        raise NotApplicable(f"minimum-degree-two bound needs Delta >= 28, got {Delta}")
    value = 2 * Delta * 2 * math.sqrt(2 * Delta) / (Delta + 2)
    return BoundResult(BoundId.T2_20, value, True, FamilySpec(FamilyKind.CompleteBipartite, 2, Delta),
                       "minimum degree 2 only")


# -- aggregation -------------------------------------------------------------

def all_bounds(delta: int, Delta: int, m: int | None = None) -> list[BoundResult]:
    """Every bound for the profile, applicable or not, in identifier order."""
    _check(delta, Delta)
    rows = [bound_thm_2_7(delta, Delta, refine=False)]
    odd = _odd(delta, Delta)
    rows.append(bound_thm_2_7(delta, Delta) if odd else _na(BoundId.T2_7_odd, "even degree product"))
    if Delta >= 2:
        t211 = bound_thm_2_11(delta, Delta)
        other = BoundId.T2_11_even if odd else BoundId.T2_11_odd
        both = [t211, _na(other, "parity does not match")]
        rows.extend(sorted(both, key=lambda r: _ORDER[r.theorem_id]))
    else:
        rows += [_na(BoundId.T2_11_even, "needs Delta >= 2"), _na(BoundId.T2_11_odd, "needs Delta >= 2")]
    for tid, fn in ((BoundId.C2_13, bound_cor_2_13), (BoundId.C2_14, bound_cor_2_14),
                    (BoundId.C2_15, bound_cor_2_15)):
        try:
            rows.append(fn(delta, Delta))
        except (NotApplicable, BadParams) as exc:
            rows.append(_na(tid, str(exc)))
    if delta == Delta - 1 and Delta >= 2:
        rows.append(bound_cor_2_16(Delta))
    else:
        rows.append(_na(BoundId.C2_16, "needs delta = Delta - 1"))
    try:
        rows.append(bound_cor_2_17(delta, Delta))
    except NotApplicable as exc:
        rows.append(_na(BoundId.C2_17, str(exc)))
    if delta != 2:
        rows.append(_na(BoundId.T2_20, "needs delta = 2"))
    else:
        try:
            rows.append(bound_thm_2_20(Delta))
        except NotApplicable as exc:
            rows.append(_na(BoundId.T2_20, str(exc)))
    if m is None:
        rows.append(_na(BoundId.CLASSIC_2_1, "needs the edge count"))
    else:
        cb = classic_bounds(m, delta, Delta)
        rows.append(BoundResult(BoundId.CLASSIC_2_1, cb.lower, True, None,
                                "equality iff regular or degree-bipartitioned"))
    return rows


def best_lower_bound(delta: int, Delta: int, m: int | None = None, tol: float = TOL) -> BoundResult:
    """Largest applicable bound; near-ties prefer a bound with an equality family, then identifier order."""
    rows = [r for r in all_bounds(delta, Delta, m) if r.applicable]
    top = max(r.value for r in rows)
    tied = [r for r in rows if r.value >= top - tol]
    return min(tied, key=lambda r: (r.equality_family is None, _ORDER[r.theorem_id]))


def best_lower_bound_for_graph(g: Graph, tol: float = TOL) -> BoundResult:
    """Best profile bound for the graph's (delta, Delta); the edge count is not used."""
    s = degree_summary(g)
    if s.m < 1:
        raise EmptyGraph("GA1 is undefined on a graph without edges")
    if s.delta < 1:
        raise BadParams("bounds need minimum degree >= 1; the graph has an isolated vertex")
    return best_lower_bound(s.delta, s.Delta, tol=tol)
