"""Exact feedback vertex set provider for the compression pipeline.

Plain FVS, no independence requirement. Branch and bound over the vertices
of a shortest cycle, with standard degree reductions and a vertex-disjoint
cycle packing lower bound for pruning. min_fvs deepens the budget until the
decision version succeeds, so the returned set is minimum.
"""
from __future__ import annotations

from .multigraph import MultiGraph


def _reduce(g: MultiGraph, acc: list[int]) -> None:
    """Shrink g in place; vertices forced into every FVS land in acc.

    A loop forces its vertex. Degree <= 1 vertices are irrelevant. A
    degree-2 vertex is bypassed by tying its two edge endpoints together,
    which may create a loop or a parallel edge; both are meaningful and are
    picked up by the next round.
    """
    dirty = True
    while dirty:
        dirty = False
        for v in sorted(g.vertices):
            if v not in g:
                continue
            if g.multiplicity(v, v) > 0:
                g.remove_vertex(v)
                acc.append(v)
                dirty = True
                continue
            d = g.deg(v)
            if d <= 1:
                g.remove_vertex(v)
                dirty = True
                continue
            if d == 2:
                nbrs = sorted(g.neighbors(v))
                g.remove_vertex(v)
                if len(nbrs) == 1:
                    g.add_edge(nbrs[0], nbrs[0])  # double edge collapses to a loop
                else:
                    g.add_edge(nbrs[0], nbrs[1])
                dirty = True


def _shortest_cycle(g: MultiGraph) -> list[int] | None:
    """Vertices of some shortest cycle, None on a forest.

    Assumes no loops (reduced graph). A parallel edge is a 2-cycle. Longer
    cycles come from a BFS per vertex.
    """
    best: list[int] | None = None
    for u, v, m in g.edge_items():
        if u != v and m >= 2:
            return [u, v]
    for s in sorted(g.vertices):
        parent = {s: None}
        depth = {s: 0}
        queue = [s]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for y in g.neighbors(x):
                if y not in depth:
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif parent[x] != y and depth[y] >= depth[x]:
                    # cycle through s-free paths to x and y plus the edge xy
                    path_x = []
                    a = x
                    while a is not None:
                        path_x.append(a)
                        a = parent[a]
                    path_y = []
                    b = y
                    while b is not None:
                        path_y.append(b)
                        b = parent[b]
                    common = set(path_x) & set(path_y)
                    cyc = [z for z in path_x if z not in common]
                    cyc += [z for z in path_y if z not in common]
                    top = next(z for z in path_x if z in common)
                    cyc.append(top)
                    if best is None or len(cyc) < len(best):
                        best = cyc
        if best is not None and len(best) == 3:
            break
    return best


def cycle_packing_lower_bound(g: MultiGraph) -> int:
    """Greedy count of vertex-disjoint cycles; a valid FVS lower bound."""
    h = g.copy()
    count = 0
    while True:
        _reduce(h, acc := [])
        count += len(acc)
        cyc = _shortest_cycle(h)
        if cyc is None:
            return count
        for v in cyc:
            h.remove_vertex(v)
        count += 1


def _bnb(g: MultiGraph, budget: int, acc: list[int]) -> list[int] | None:
    forced_before = len(acc)
    _reduce(g, acc)
    budget -= len(acc) - forced_before
    if budget < 0:
        return None
    cyc = _shortest_cycle(g)
    if cyc is None:
        return acc
    if budget == 0 or cycle_packing_lower_bound(g) > budget:
        return None
    for v in sorted(cyc):
        child = g.copy()
        child.remove_vertex(v)
        res = _bnb(child, budget - 1, acc + [v])
        if res is not None:
            return res
    return None


def fvs_at_most(g: MultiGraph, k: int) -> set[int] | None:
    """Some feedback vertex set of size at most k, or None."""
    if k < 0:
        return None
    res = _bnb(g.copy(), k, [])
    return set(res) if res is not None else None


def min_fvs(g: MultiGraph) -> set[int]:
    """Minimum feedback vertex set by iterative deepening."""
    start = cycle_packing_lower_bound(g)
    for k in range(start, len(g) + 1):
        res = fvs_at_most(g, k)
        if res is not None:
            return res
    raise AssertionError("unreachable: the whole vertex set is an FVS")
