"""Reduction rules for the disjoint engine.

Seven rules, applied lowest number first until none fires. Site selection
inside a rule is deterministic (smallest vertex id, or lexicographically
smallest pair), so a fixpoint run is reproducible. Rules never grow the
measure when observed fixpoint to fixpoint; rule 6 may raise it transiently
because moving an isolated restricted vertex into W adds a W-component
before later rules cash in the offset.

Rule catalogue, by what each one does:
  1  delete any vertex with at most one incident edge occurrence
  2  bypass one of two adjacent degree-2 vertices outside W
  3  reject when the budget or the measure went negative
  4  reject when a restricted vertex double-links one W-component
  5  force a deletable vertex that double-links one W-component
  6  promote a restricted vertex with generalized degree or tent degree
  7  restrict all degree-2 free neighbors of a free vertex
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .instance import DisInstance, Kind, classification, measure

RULE_IDS = (1, 2, 3, 4, 5, 6, 7)


@dataclass(frozen=True)
class ReductionEvent:
    rule: int
    pivot: int | None
    mu_before: int
    mu_after: int


@dataclass
class ReductionOutcome:
    """Result of trying one rule: reduced, reject, or unchanged."""

    status: str  # "reduced" | "reject" | "unchanged"
    instance: DisInstance | None
    rule_id: int
    forced: frozenset[int] = frozenset()
    touched: frozenset[int] = frozenset()
    pivot: int | None = None
    mu_before: int | None = None
    mu_after: int | None = None


@dataclass
class FixpointResult:
    instance: DisInstance | None  # None means the instance was rejected
    forced: set[int]
    events: list[ReductionEvent] = field(default_factory=list)
    rejected_by: int | None = None

    @property
    def rejected(self) -> bool:
        return self.instance is None


def _w_component_ids(inst: DisInstance) -> dict[int, int]:
    comp_of = {}
    for i, comp in enumerate(inst.graph.components(inst.w)):
        for v in comp:
            comp_of[v] = i
    return comp_of


def _double_link(inst: DisInstance, v: int, comp_of: dict[int, int]) -> bool:
    """Does v send two or more edge occurrences into one W-component?"""
    seen: dict[int, int] = {}
    for u in inst.graph.neighbors(v):
        if u in inst.w:
            c = comp_of[u]
            seen[c] = seen.get(c, 0) + inst.graph.multiplicity(v, u)
            if seen[c] >= 2:
                return True
    return False


# -- individual rules ------------------------------------------------------


def _find_rule1(inst: DisInstance) -> int | None:
    for v in sorted(inst.graph.vertices):
        if inst.graph.deg(v) <= 1:
            return v
    return None


def _apply_rule1(inst: DisInstance) -> ReductionOutcome | None:
    v = _find_rule1(inst)
    if v is None:
        return None
    mu0 = measure(inst).mu
    out = inst.clone()
    out.delete_vertex(v)
    return ReductionOutcome(
        "reduced", out, 1, touched=frozenset({v}), pivot=v,
        mu_before=mu0, mu_after=measure(out).mu,
    )


def _find_rule2(inst: DisInstance) -> tuple[int, int] | None:
    g = inst.graph
    classes = classification(inst)
    best = None
    for u in inst.f:
        if g.deg(u) != 2 or classes[u].kind is Kind.NICE:
            continue
        for v in g.neighbors(u):
            if v <= u or v in inst.w:
                continue
            if g.deg(v) != 2 or classes[v].kind is Kind.NICE:
                continue
            pair = (u, v)
            if best is None or pair < best:
                best = pair
    return best


def _apply_rule2(inst: DisInstance) -> ReductionOutcome | None:
    pair = _find_rule2(inst)
    if pair is None:
        return None
    u, v = pair
    mu0 = measure(inst).mu
    out = inst.clone()
    g = out.graph
    in_r = (u in out.r, v in out.r)
    if in_r == (False, True):
        drop, keep = v, u
    elif in_r == (True, False):
        drop, keep = u, v
    else:
        # neither or both restricted: either endpoint works, take the smaller
        drop, keep = (u, v) if u < v else (v, u)
    # the dropped vertex has exactly two edge occurrences: one to its partner,
    # one to some other vertex (a double edge inside F would be an F-cycle)
    other = next(x for x in g.neighbors(drop) if x != keep)
    out.delete_vertex(drop)
    g.add_edge(keep, other)
    if other not in out.w and g.multiplicity(keep, other) >= 2:
        raise AssertionError("bypass created a parallel edge inside F")
    return ReductionOutcome(
        "reduced", out, 2, touched=frozenset({u, v, other}), pivot=drop,
        mu_before=mu0, mu_after=measure(out).mu,
    )


def _apply_rule3(inst: DisInstance) -> ReductionOutcome | None:
    mu0 = measure(inst).mu
    if inst.k < 0 or mu0 < 0:
        return ReductionOutcome("reject", None, 3, mu_before=mu0, mu_after=mu0)
    return None


def _apply_rule4(inst: DisInstance) -> ReductionOutcome | None:
    comp_of = _w_component_ids(inst)
    for v in sorted(inst.r):
        if _double_link(inst, v, comp_of):
            mu0 = measure(inst).mu
            return ReductionOutcome(
                "reject", None, 4, pivot=v, mu_before=mu0, mu_after=mu0,
            )
    return None


def _apply_rule5(inst: DisInstance) -> ReductionOutcome | None:
    comp_of = _w_component_ids(inst)
    for v in sorted(inst.f_free):
        if not _double_link(inst, v, comp_of):
            continue
        mu0 = measure(inst).mu
        out = inst.clone()
        forced_neighbors = out.graph.neighbors(v) & out.f
        out.delete_vertex(v)
        out.r |= forced_neighbors
        out.k -= 1
        return ReductionOutcome(
            "reduced", out, 5, forced=frozenset({v}),
            touched=frozenset({v}) | frozenset(forced_neighbors), pivot=v,
            mu_before=mu0, mu_after=measure(out).mu,
        )
    return None


def _apply_rule6(inst: DisInstance) -> ReductionOutcome | None:
    classes = classification(inst)
    for v in sorted(inst.r):
        c = classes[v]
        if c.gdeg >= 1 or c.tdeg >= 1:
            mu0 = measure(inst).mu
            out = inst.clone()
            out.r.discard(v)
            out.w.add(v)
            # rule 4 fires first on a double link, so the move merges
            # distinct W-components and cannot close a cycle inside W
            assert out.graph.is_forest(out.w), "promotion closed a W-cycle"
            return ReductionOutcome(
                "reduced", out, 6, touched=frozenset({v}), pivot=v,
                mu_before=mu0, mu_after=measure(out).mu,
            )
    return None


def _apply_rule7(inst: DisInstance) -> ReductionOutcome | None:
    g = inst.graph
    blocked = inst.w | inst.r
    for v in sorted(inst.f_free):
        nbrs = g.neighbors(v) - blocked
        if nbrs and all(g.deg(u) == 2 for u in nbrs):
            mu0 = measure(inst).mu
            out = inst.clone()
            out.r |= nbrs
            return ReductionOutcome(
                "reduced", out, 7, touched=frozenset({v}) | frozenset(nbrs),
                pivot=v, mu_before=mu0, mu_after=measure(out).mu,
            )
    return None


_RULES = {
    1: _apply_rule1,
    2: _apply_rule2,
    3: _apply_rule3,
    4: _apply_rule4,
    5: _apply_rule5,
    6: _apply_rule6,
    7: _apply_rule7,
}


def apply_rule(inst: DisInstance, rule_id: int) -> ReductionOutcome:
    """Try one rule at its deterministic site. Pure: inst is never mutated.

    The caller is responsible for the lowest-number-first discipline;
    reduce_to_fixpoint enforces it. Applying a high rule while a lower one
    is applicable can void the safety argument of the high rule.
    """
    if rule_id not in _RULES:
        raise ValueError(f"unknown rule id {rule_id}")
    out = _RULES[rule_id](inst)
    if out is None:
        return ReductionOutcome("unchanged", inst, rule_id)
    return out


def reduce_to_fixpoint(inst: DisInstance) -> FixpointResult:
    """Apply the lowest-numbered applicable rule until none fires.

    Returns the reduced instance, the vertices forced into the solution by
    rule 5, and the ordered event trace. On a rejection the trace still
    carries everything up to and including the rejecting event.
    """
    cur = inst
    forced: set[int] = set()
    events: list[ReductionEvent] = []
    while True:
        fired = False
        for rule_id in RULE_IDS:
            out = _RULES[rule_id](cur)
            if out is None:
                continue
            events.append(
                ReductionEvent(rule_id, out.pivot, out.mu_before, out.mu_after)
            )
            if out.status == "reject":
                return FixpointResult(None, forced, events, rejected_by=rule_id)
            forced |= out.forced
            cur = out.instance
            fired = True
            break
        if not fired:
            return FixpointResult(cur, forced, events)
