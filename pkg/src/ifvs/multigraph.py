"""Undirected multigraph with explicit edge multiplicities and loops."""
from __future__ import annotations

from collections.abc import Iterable


class MultiGraph:
    """Adjacency-map multigraph over integer vertex ids.

    Multiplicities are stored exactly. A loop at v is the edge (v, v) and
    contributes 2 to deg(v). Vertex ids come from a monotone counter and are
    never reused after deletion, so ids stay stable for the lifetime of a
    solver run.
    """

    __slots__ = ("_adj", "_next_id")

    def __init__(self, vertices: Iterable[int] = ()) -> None:
        self._adj: dict[int, dict[int, int]] = {}
        self._next_id = 0
        for v in vertices:
            self.add_vertex(v)

    # -- construction ------------------------------------------------------

    def add_vertex(self, v: int) -> int:
        self._adj.setdefault(v, {})
        if v >= self._next_id:
            self._next_id = v + 1
        return v

    def new_vertex(self) -> int:
        """Allocate a fresh id strictly above every id ever used."""
        return self.add_vertex(self._next_id)

    def add_edge(self, u: int, v: int, mult: int = 1) -> None:
        if mult <= 0:
            raise ValueError(f"edge multiplicity must be positive, got {mult}")
        self.add_vertex(u)
        self.add_vertex(v)
        self._adj[u][v] = self._adj[u].get(v, 0) + mult
        if u != v:
            self._adj[v][u] = self._adj[v].get(u, 0) + mult

    def remove_vertex(self, v: int) -> None:
        for u in self._adj.pop(v):
            if u != v:
                del self._adj[u][v]

    def copy(self) -> MultiGraph:
        g = MultiGraph()
        g._adj = {v: dict(nbrs) for v, nbrs in self._adj.items()}
        g._next_id = self._next_id
        return g

    # -- inspection --------------------------------------------------------

    @property
    def vertices(self) -> set[int]:
        return set(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    @property
    def num_edges(self) -> int:
        """Total number of edge occurrences, loops counted once each."""
        total = sum(sum(nbrs.values()) for nbrs in self._adj.values())
        loops = sum(nbrs.get(v, 0) for v, nbrs in self._adj.items())
        # each non-loop occurrence was counted from both sides
        return (total - loops) // 2 + loops

    def multiplicity(self, u: int, v: int) -> int:
        return self._adj.get(u, {}).get(v, 0)

    def neighbors(self, v: int) -> set[int]:
        """Distinct adjacent vertices, excluding v itself."""
        return {u for u in self._adj[v] if u != v}

    def deg(self, v: int) -> int:
        """Total incident edge occurrences; a loop contributes 2."""
        nbrs = self._adj[v]
        return sum(nbrs.values()) + nbrs.get(v, 0)

    def deg_x(self, v: int, x: Iterable[int]) -> int:
        """Edge occurrences from v into the vertex set x.

        A loop at v contributes 2 when v itself lies in x. Unknown v is an
        error; unknown members of x are ignored.
        """
        if v not in self._adj:
            raise ValueError(f"vertex {v} not in graph")
        nbrs = self._adj[v]
        xs = x if isinstance(x, (set, frozenset)) else set(x)
        d = sum(m for u, m in nbrs.items() if u in xs)
        if v in xs:
            d += nbrs.get(v, 0)
        return d

    def edge_items(self) -> list[tuple[int, int, int]]:
        """Sorted (u, v, mult) with u <= v, each undirected edge once."""
        return [
            (u, v, self._adj[u][v])
            for u in sorted(self._adj)
            for v in sorted(self._adj[u])
            if u <= v
        ]

    # -- structure queries -------------------------------------------------

    def components(self, x: Iterable[int] | None = None) -> list[set[int]]:
        """Connected components of the subgraph induced on x (default: all)."""
        verts = set(self._adj) if x is None else {v for v in x if v in self._adj}
        seen: set[int] = set()
        comps = []
        for s in sorted(verts):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                for u in self._adj[v]:
                    if u in verts and u not in seen:
                        seen.add(u)
                        comp.add(u)
                        stack.append(u)
            comps.append(comp)
        return comps

    def is_forest(self, x: Iterable[int] | None = None) -> bool:
        """True iff the subgraph induced on x has no cycle.

        A loop or a multiplicity >= 2 edge inside x is a cycle.
        """
        verts = set(self._adj) if x is None else {v for v in x if v in self._adj}
        parent = {v: v for v in verts}

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u in verts:
            for v, m in self._adj[u].items():
                if v not in verts or v < u:
                    continue
                if u == v or m >= 2:
                    return False
                ru, rv = find(u), find(v)
                if ru == rv:
                    return False
                parent[ru] = rv
        return True

    def contract(self, parts: list[set[int]]) -> tuple[MultiGraph, dict[int, int]]:
        """Contract each part to a single node, keeping cross multiplicities.

        Each part must be a nonempty connected set of vertices, pairwise
        disjoint from the other parts. Edges with both ends inside one part
        disappear (no self loops are created). The contracted node carries the
        smallest id of its part. Returns the new graph and the full
        original-vertex to node mapping.
        """
        mapping: dict[int, int] = {}
        for part in parts:
            if not part:
                raise ValueError("empty part")
            if not part <= set(self._adj):
                raise ValueError("part contains unknown vertices")
            if len(self.components(part)) != 1:
                raise ValueError(f"part {sorted(part)} is not connected")
            rep = min(part)
            for v in part:
                if v in mapping:
                    raise ValueError(f"vertex {v} appears in two parts")
                mapping[v] = rep
        for v in self._adj:
            mapping.setdefault(v, v)

        out = MultiGraph()
        for v in self._adj:
            out.add_vertex(mapping[v])
        contracted = {v for part in parts for v in part}
        for u, v, m in self.edge_items():
            mu, mv = mapping[u], mapping[v]
            if mu == mv and (u != v or u in contracted):
                continue
            out.add_edge(mu, mv, m)
        out._next_id = max(out._next_id, self._next_id)
        return out, mapping

    def __repr__(self) -> str:  # pragma: no cover
        return f"MultiGraph(n={len(self._adj)}, m={self.num_edges})"
