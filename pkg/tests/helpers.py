"""Shared instance builders and checkers for the test suite."""
from ifvs.multigraph import MultiGraph
from ifvs.reductions import RULE_IDS, apply_rule


def complete(n: int) -> MultiGraph:
    g = MultiGraph(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            g.add_edge(u, v)
    return g


def cycle(n: int) -> MultiGraph:
    g = MultiGraph(range(n))
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
    return g


def path(n: int) -> MultiGraph:
    g = MultiGraph(range(n))
    for i in range(n - 1):
        g.add_edge(i, i + 1)
    return g


def petersen() -> MultiGraph:
    g = MultiGraph(range(10))
    for i in range(5):
        g.add_edge(i, (i + 1) % 5)
        g.add_edge(i, i + 5)
        g.add_edge(i + 5, 5 + (i + 2) % 5)
    return g


def lowest_applicable_rule(inst) -> int | None:
    for rid in RULE_IDS:
        if apply_rule(inst.clone(), rid).status != "unchanged":
            return rid
    return None


def branch_drops_ok(node) -> bool:
    """Every real child drops the measure by 1, and unless a child was
    rejected outright, one of the two drops is at least 2."""
    drops = []
    rejected = 0
    for _label, child in node.children:
        if child.mu is None:
            rejected += 1
        else:
            drops.append(node.mu - child.mu)
    if any(d < 1 for d in drops):
        return False
    if rejected == 0 and (len(drops) != 2 or max(drops) < 2):
        return False
    return True
