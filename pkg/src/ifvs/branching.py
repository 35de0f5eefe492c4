"""Measure-driven branching for the disjoint engine.

At a reduced instance the engine picks a pivot vertex v in F that is neither
nice, nor a tent, nor potentially nice, and recurses on two children: delete
v (v joins the solution, its free neighbors become restricted, budget drops)
or protect v (v joins W). Pivot eligibility prefers the earliest of

  case A  generalized degree of v at least 3
  case B  generalized degree at least 1 and tent degree at least 1
  case C  tent degree at least 2

with ties broken by smallest id. Both children lose at least one unit of
measure by the time their own reductions reach a fixpoint, and one of them
loses at least two, which gives the Fibonacci-shaped search tree that the
trace checks enforce. When no pivot exists every vertex of F must be nice or
a tent and the matroid parity base case finishes in polynomial time.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .basecase import solve_base
from .instance import DisInstance, InternalSolverError, Kind, classification, measure
from .reductions import ReductionEvent, reduce_to_fixpoint

CASE_A = "A"
CASE_B = "B"
CASE_C = "C"


@dataclass(frozen=True)
class PivotChoice:
    vertex: int
    case: str


@dataclass
class BranchNode:
    """One engine node, recorded after the node's own reduction fixpoint."""

    kind: str  # "branch" | "base" | "reject"
    mu: int | None = None
    pivot: int | None = None
    case: str | None = None
    children: list[tuple[str, BranchNode]] = field(default_factory=list)
    reductions: list[ReductionEvent] = field(default_factory=list)
    answer: str | None = None  # leaves: "yes" | "no"

    def walk(self):
        yield self
        for _, child in self.children:
            yield from child.walk()


@dataclass
class DisjointStats:
    nodes: int = 0
    branch_nodes: int = 0
    base_leaves: int = 0
    reject_leaves: int = 0
    mu0: int | None = None


@dataclass
class DisjointResult:
    solution: set[int] | None
    trace: BranchNode
    stats: DisjointStats

    @property
    def feasible(self) -> bool:
        return self.solution is not None


def select_pivot(inst: DisInstance, classes=None) -> PivotChoice | None:
    """Deterministic pivot choice on a reduced instance.

    Scans F for vertices that are not nice, tent, or potentially nice and
    returns the smallest id in the earliest nonempty case. Returns None when
    the instance is a base case. A pivot inside R would mean rule 6 was
    still applicable, which the engine treats as an internal error.
    """
    if classes is None:
        classes = classification(inst)
    best = {CASE_A: None, CASE_B: None, CASE_C: None}
    for v in sorted(classes):
        c = classes[v]
        if c.kind in (Kind.NICE, Kind.TENT, Kind.P_NICE):
            continue
        if best[CASE_A] is None and c.gdeg >= 3:
            best[CASE_A] = v
        if best[CASE_B] is None and c.gdeg >= 1 and c.tdeg >= 1:
            best[CASE_B] = v
        if best[CASE_C] is None and c.tdeg >= 2:
            best[CASE_C] = v
    for case in (CASE_A, CASE_B, CASE_C):
        v = best[case]
        if v is not None:
            if v in inst.r:
                raise InternalSolverError(
                    f"pivot {v} sits in R; rule 6 should have promoted it"
                )
            return PivotChoice(v, case)
    return None


def branch_delete(inst: DisInstance, v: int) -> DisInstance:
    """Child where v joins the solution.

    The budget drops by one and every free neighbor of v becomes restricted,
    which keeps later deletions independent from v.
    """
    out = inst.clone()
    nbrs = out.graph.neighbors(v) & out.f
    out.delete_vertex(v)
    out.r |= nbrs
    out.k -= 1
    return out


def branch_to_w(inst: DisInstance, v: int) -> DisInstance:
    """Child where v is protected forever by joining W."""
    out = inst.clone()
    out.w.add(v)
    out.r.discard(v)
    assert out.graph.is_forest(out.w), "protected vertex closed a W-cycle"
    return out


def _better(a: set[int] | None, b: set[int] | None) -> set[int] | None:
    """Smaller solution wins, ties by sorted vertex tuple."""
    if a is None:
        return b
    if b is None:
        return a
    return a if (len(a), sorted(a)) <= (len(b), sorted(b)) else b


def solve_disjoint(inst: DisInstance) -> DisjointResult:
    """Minimum valid deletion set of a disjoint instance, with trace.

    Returns solution None when no independent set of at most k deletable
    vertices breaks all cycles. The recorded trace carries measures at every
    node fixpoint; the engine hard-checks the drop guarantees and raises
    InternalSolverError on any accounting violation.
    """
    root_budget = [None]

    def recurse(node_inst: DisInstance, depth: int) -> tuple[set[int] | None, BranchNode]:
        red = reduce_to_fixpoint(node_inst)
        if red.rejected:
            return None, BranchNode(
                "reject", reductions=red.events, answer="no",
            )
        cur = red.instance
        mu = measure(cur).mu
        if root_budget[0] is None:
            root_budget[0] = mu
        elif depth > root_budget[0] + 1:
            raise InternalSolverError(
                f"depth {depth} exceeds root measure budget {root_budget[0]}"
            )
        classes = classification(cur)
        pivot = select_pivot(cur, classes)
        if pivot is None:
            for v, c in classes.items():
                if c.kind not in (Kind.NICE, Kind.TENT):
                    raise InternalSolverError(
                        f"base case reached with non-settled vertex {v} ({c.kind})"
                    )
            base = solve_base(cur)
            node = BranchNode(
                "base", mu=mu, reductions=red.events,
                answer="yes" if base is not None else "no",
            )
            if base is None:
                return None, node
            return red.forced | base, node

        del_sol, del_node = recurse(branch_delete(cur, pivot.vertex), depth + 1)
        if del_sol is not None:
            del_sol = del_sol | {pivot.vertex}
        w_sol, w_node = recurse(branch_to_w(cur, pivot.vertex), depth + 1)

        # rejected children count as an unbounded drop; real children must
        # drop at least 1 each and at least one side must drop 2 or more
        drops = []
        for child in (del_node, w_node):
            if child.mu is not None:
                if child.mu >= mu:
                    raise InternalSolverError(
                        f"child measure {child.mu} did not drop below {mu}"
                    )
                drops.append(mu - child.mu)
        if len(drops) == 2 and max(drops) < 2:
            raise InternalSolverError(
                f"branch at measure {mu} dropped only {drops}; need one drop >= 2"
            )

        node = BranchNode(
            "branch", mu=mu, pivot=pivot.vertex, case=pivot.case,
            children=[("delete", del_node), ("to_w", w_node)],
            reductions=red.events,
        )
        best = _better(del_sol, w_sol)
        if best is None:
            return None, node
        return red.forced | best, node

    solution, root = recurse(inst, 1)
    stats = DisjointStats()
    for node in root.walk():
        stats.nodes += 1
        if node.kind == "branch":
            stats.branch_nodes += 1
        elif node.kind == "base":
            stats.base_leaves += 1
        else:
            stats.reject_leaves += 1
    stats.mu0 = root.mu
    return DisjointResult(solution, root, stats)


def fib(n: int) -> int:
    """Fibonacci with fib(1) = fib(2) = 1; fib(0) = 0 for convenience."""
    if n < 0:
        raise ValueError("fib wants a nonnegative index")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def count_base_leaves(root: BranchNode) -> int:
    return sum(1 for node in root.walk() if node.kind == "base")
