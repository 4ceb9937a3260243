"""Simple undirected graphs with integer vertex ids."""

from __future__ import annotations

from typing import Iterable, Mapping


class GraphError(ValueError):
    pass


class Graph:
    """A simple graph; vertex ids need not be contiguous.

    ``Graph.from_edges(n, edges)`` builds the usual graph on ``0..n-1``.
    """

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        self._adj: dict[int, set[int]] = {v: set() for v in sorted(vertices)}
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u not in self._adj or v not in self._adj:
                raise GraphError(f"edge ({u}, {v}) references an unknown vertex")
            self._adj[u].add(v)
            self._adj[v].add(u)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
        return cls(range(n), edges)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def petersen(cls) -> Graph:
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def vertices(self) -> list[int]:
        return list(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> set[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def induced(self, keep: Iterable[int]) -> Graph:
        keep = set(keep)
        return Graph(
            (v for v in self._adj if v in keep),
            ((u, v) for u, v in self.edges() if u in keep and v in keep),
        )

    def without(self, drop: Iterable[int]) -> Graph:
        drop = set(drop)
        return self.induced(v for v in self._adj if v not in drop)

    def with_edge_removed(self, u: int, v: int) -> Graph:
        return Graph(self._adj, (e for e in self.edges() if e != (min(u, v), max(u, v))))

    def is_subgraph_of(self, other: Graph) -> bool:
        return all(v in other for v in self._adj) and all(other.has_edge(u, v) for u, v in self.edges())

    def relabeled(self) -> tuple[Graph, dict[int, int]]:
        """Copy on ``0..n-1`` preserving vertex order; also returns the old-to-new map."""
        mapping = {v: i for i, v in enumerate(self._adj)}
        return Graph.from_edges(len(mapping), ((mapping[u], mapping[v]) for u, v in self.edges())), mapping

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def is_proper_coloring(G: Graph, coloring: Mapping[int, int], q: int | None = None) -> bool:
    """Every vertex colored (within ``range(q)`` if given) and no edge monochromatic."""
    for v in G.vertices:
        if v not in coloring:
            return False
        if q is not None and not 0 <= coloring[v] < q:
            return False
    return all(coloring[u] != coloring[v] for u, v in G.edges())
