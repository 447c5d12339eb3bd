"""Abstract bipartite (multi)graphs."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import DuplicateEdgeInSimpleMode, IndexOutOfRange, NonBipartiteEdge, SelfLoop


class Part(str, Enum):
    A = "A"
    B = "B"

    @property
    def other(self) -> "Part":
        return Part.B if self is Part.A else Part.A


@dataclass(frozen=True)
class AbstractGraph:
    """Vertices 0..n-1 with partition labels and edges with dense ids 0..m-1."""

    vertex_count: int
    partition: tuple[Part, ...]
    edges: tuple[tuple[int, int], ...]
    multigraph_allowed: bool = False
    bipartite: bool = True

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise IndexOutOfRange("negative vertex count")
        if len(self.partition) != self.vertex_count:
            raise IndexOutOfRange(
                f"partition has {len(self.partition)} labels for {self.vertex_count} vertices"
            )
        seen: set[tuple[int, int]] = set()
        for eid, (u, v) in enumerate(self.edges):
            for x in (u, v):
                if not 0 <= x < self.vertex_count:
                    raise IndexOutOfRange(f"edge {eid}: endpoint {x} out of range")
            if u == v:
                raise SelfLoop(f"edge {eid} is a loop at {u}")
            if self.bipartite and self.partition[u] == self.partition[v]:
                raise NonBipartiteEdge(f"edge {eid} joins two {self.partition[u].value}-vertices")
            key = (min(u, v), max(u, v))
            if key in seen and not self.multigraph_allowed:
                raise DuplicateEdgeInSimpleMode(f"edge {eid} duplicates pair {key}")
            seen.add(key)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def other_end(self, e: int, x: int) -> int:
        u, v = self.edges[e]
        return v if x == u else u

    def incident(self, x: int) -> list[int]:
        return [e for e, (u, v) in enumerate(self.edges) if x in (u, v)]

    def adjacent(self, e: int, f: int) -> bool:
        """True if the two edges share an endpoint."""
        return bool(set(self.edges[e]) & set(self.edges[f]))

    def has_parallel_edges(self) -> bool:
        keys = [(min(u, v), max(u, v)) for u, v in self.edges]
        return len(set(keys)) != len(keys)

    def parallel_classes(self) -> list[list[int]]:
        groups: dict[tuple[int, int], list[int]] = {}
        for e, (u, v) in enumerate(self.edges):
            groups.setdefault((min(u, v), max(u, v)), []).append(e)
        return [g for g in groups.values() if len(g) > 1]

    def degree(self, x: int) -> int:
        return sum((u == x) + (v == x) for u, v in self.edges)


def new_graph(
    n: int,
    partition: Sequence[Part | str],
    edges: Iterable[tuple[int, int]],
    multigraph_allowed: bool = False,
    bipartite: bool = True,
) -> AbstractGraph:
    parts = tuple(Part(p) if not isinstance(p, Part) else p for p in partition)
    return AbstractGraph(n, parts, tuple((int(u), int(v)) for u, v in edges), multigraph_allowed, bipartite)


def is_bipartite_consistent(g: AbstractGraph) -> bool:
    return all(g.partition[u] != g.partition[v] for u, v in g.edges)


def complete_bipartite(a: int, b: int) -> AbstractGraph:
    """K_{a,b} with the A-side numbered first."""
    parts = [Part.A] * a + [Part.B] * b
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return new_graph(a + b, parts, edges)
