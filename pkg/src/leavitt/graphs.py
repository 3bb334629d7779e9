"""Finite directed multigraphs: paths, cycles, reachability, Condition (L).

Vertices and edges are named and keep insertion order.  Parallel edges and
loops are allowed.  All values are immutable after construction and every
operation is a pure function, so graphs are safe to share freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import UnknownVertexError


class Edge(NamedTuple):
    """Directed edge ``src -> dst`` carrying its own name."""

    name: str
    src: str
    dst: str


@dataclass(frozen=True)
class Path:
    """Finite path: consecutive edges, or a bare base vertex when trivial.

    A trivial path has length 0 and source = target = its base vertex.
    Nontrivial paths require the target of each edge to be the source of
    the next one.
    """

    edges: tuple[Edge, ...] = ()
    base: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.edges:
            if self.base is None:
                raise ValueError("a trivial path needs a base vertex")
            return
        if self.base is not None:
            raise ValueError("base vertex is only meaningful for trivial paths")
        for left, right in zip(self.edges, self.edges[1:]):
            if left.dst != right.src:
                raise ValueError(f"edges {left.name!r} and {right.name!r} are not consecutive")

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls((), vertex)

    @property
    def source(self) -> str:
        return self.base if self.base is not None else self.edges[0].src

    @property
    def target(self) -> str:
        return self.base if self.base is not None else self.edges[-1].dst

    @property
    def length(self) -> int:
        return len(self.edges)

    def vertex_set(self) -> frozenset[str]:
        """All vertices the path visits."""
        if not self.edges:
            return frozenset((self.base,))
        return frozenset(e.src for e in self.edges) | {self.edges[-1].dst}


@dataclass(frozen=True)
class Cycle:
    """Nontrivial closed path whose edge sources are pairwise distinct."""

    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.edges:
            raise ValueError("a cycle has at least one edge")
        for left, right in zip(self.edges, self.edges[1:]):
            if left.dst != right.src:
                raise ValueError(f"edges {left.name!r} and {right.name!r} are not consecutive")
        if self.edges[-1].dst != self.edges[0].src:
            raise ValueError("cycle is not closed")
        sources = [e.src for e in self.edges]
        if len(set(sources)) != len(sources):
            raise ValueError("cycle revisits a vertex")

    @classmethod
    def canonical(cls, edges: tuple[Edge, ...]) -> "Cycle":
        """The lexicographically least rotation, used as the class representative."""
        rotations = [edges[i:] + edges[:i] for i in range(len(edges))]
        best = min(rotations, key=lambda rot: tuple(e.name for e in rot))
        return cls(best)

    @property
    def base(self) -> str:
        return self.edges[0].src

    @property
    def length(self) -> int:
        return len(self.edges)

    def vertex_set(self) -> frozenset[str]:
        return frozenset(e.src for e in self.edges)

    def edge_names(self) -> tuple[str, ...]:
        return tuple(e.name for e in self.edges)


@dataclass(frozen=True)
class Graph:
    """Finite directed multigraph over named vertices."""

    vertices: tuple[str, ...] = ()
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        )
        seen: set[str] = set()
        for v in self.vertices:
            if v in seen:
                raise ValueError(f"duplicate vertex id: {v!r}")
            seen.add(v)
        names: set[str] = set()
        for e in self.edges:
            if e.name in names:
                raise ValueError(f"duplicate edge id: {e.name!r}")
            names.add(e.name)
            if e.src not in seen or e.dst not in seen:
                raise ValueError(f"edge {e.name!r} has an endpoint outside the vertex set")

    # -- derived lookup tables ------------------------------------------------

    @cached_property
    def _vset(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def _out(self) -> dict[str, tuple[Edge, ...]]:
        table: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            table[e.src].append(e)
        return {v: tuple(es) for v, es in table.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[Edge, ...]]:
        table: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            table[e.dst].append(e)
        return {v: tuple(es) for v, es in table.items()}

    @cached_property
    def _edge_by_name(self) -> dict[str, Edge]:
        return {e.name: e for e in self.edges}

    @cached_property
    def _vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _out_masks(self) -> tuple[int, ...]:
        """Per-vertex bitmask of out-neighbours (vertex order = insertion order)."""
        masks = [0] * len(self.vertices)
        idx = self._vertex_index
        for e in self.edges:
            masks[idx[e.src]] |= 1 << idx[e.dst]
        return tuple(masks)

    # -- basic accessors ------------------------------------------------------

    def __contains__(self, vertex: str) -> bool:
        return vertex in self._vset

    def require_vertex(self, vertex: str) -> None:
        if vertex not in self._vset:
            raise UnknownVertexError(f"unknown vertex: {vertex!r}")

    def vertex_subset(self, subset: Iterable[str]) -> frozenset[str]:
        """Validate and freeze a collection of vertex ids."""
        out = frozenset(subset)
        for v in out:
            self.require_vertex(v)
        return out

    def out_edges(self, vertex: str) -> tuple[Edge, ...]:
        self.require_vertex(vertex)
        return self._out[vertex]

    def in_edges(self, vertex: str) -> tuple[Edge, ...]:
        self.require_vertex(vertex)
        return self._in[vertex]

    # -- vertex-level operations ----------------------------------------------

    def regular_vertices(self) -> frozenset[str]:
        """Vertices emitting at least one edge; in a finite graph every emitter."""
        return frozenset(v for v in self.vertices if self._out[v])

    def sinks(self) -> frozenset[str]:
        return frozenset(v for v in self.vertices if not self._out[v])

    def tree(self, vertex: str) -> frozenset[str]:
        """Forward-reachable set of ``vertex``, including the vertex itself."""
        self.require_vertex(vertex)
        seen = {vertex}
        frontier = [vertex]
        while frontier:
            v = frontier.pop()
            for e in self._out[v]:
                if e.dst not in seen:
                    seen.add(e.dst)
                    frontier.append(e.dst)
        return frozenset(seen)

    def backward_reach(self, subset: Iterable[str]) -> frozenset[str]:
        """All vertices with a (possibly trivial) path into ``subset``."""
        seen = set(self.vertex_subset(subset))
        frontier = list(seen)
        while frontier:
            v = frontier.pop()
            for e in self._in[v]:
                if e.src not in seen:
                    seen.add(e.src)
                    frontier.append(e.src)
        return frozenset(seen)

    # -- cycles ----------------------------------------------------------------

    def cycles(self) -> tuple[Cycle, ...]:
        """All cycles, one canonical representative per rotation class."""
        found: dict[tuple[str, ...], Cycle] = {}
        for start in self.vertices:
            self._cycle_dfs(start, start, (), {start}, found)
        return tuple(sorted(found.values(), key=lambda c: (c.length, c.edge_names())))

    def _cycle_dfs(self, start, current, acc, visited, found):
        for e in self._out[current]:
            if e.dst == start:
                cyc = Cycle.canonical(acc + (e,))
                found.setdefault(cyc.edge_names(), cyc)
            elif e.dst not in visited:
                self._cycle_dfs(start, e.dst, acc + (e,), visited | {e.dst}, found)

    def cycle_has_exit(self, cycle: Cycle) -> bool:
        """True iff some vertex on the cycle emits an edge other than its cycle edge."""
        for e in cycle.edges:
            if self._edge_by_name.get(e.name) != e:
                raise ValueError(f"cycle edge {e.name!r} does not belong to this graph")
        cycle_names = {e.name for e in cycle.edges}
        return any(
            out.name not in cycle_names for e in cycle.edges for out in self._out[e.src]
        )

    def condition_l(self) -> bool:
        """Condition (L): every cycle has an exit (vacuously true without cycles)."""
        return all(self.cycle_has_exit(c) for c in self.cycles())

    def exit_free_cycle_vertices(self) -> frozenset[str]:
        """Union of the vertex sets of all cycles without an exit."""
        out: frozenset[str] = frozenset()
        for c in self.cycles():
            if not self.cycle_has_exit(c):
                out |= c.vertex_set()
        return out

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for e in self.edges:
            indeg[e.dst] += 1
        queue = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for e in self._out[v]:
                indeg[e.dst] -= 1
                if indeg[e.dst] == 0:
                    queue.append(e.dst)
        return seen == len(self.vertices)

    # -- derived graphs ----------------------------------------------------------

    def without_edge(self, name: str) -> "Graph":
        if name not in self._edge_by_name:
            raise ValueError(f"unknown edge: {name!r}")
        return Graph(self.vertices, tuple(e for e in self.edges if e.name != name))

    def without_vertex(self, vertex: str) -> "Graph":
        """Drop a vertex together with all incident edges."""
        self.require_vertex(vertex)
        return Graph(
            tuple(v for v in self.vertices if v != vertex),
            tuple(e for e in self.edges if vertex not in (e.src, e.dst)),
        )
