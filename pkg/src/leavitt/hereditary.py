"""Hereditary and saturated vertex sets: predicates, closure, lattice enumeration.

A vertex set is *hereditary* when it absorbs everything reachable forward
from it, and *saturated* when every emitter whose out-neighbours all lie in
the set is forced into it as well; sinks are never forced.  The sets that
satisfy both form a lattice (meet = intersection, join = closure of the
union) which is exactly the lattice of graded ideals of the path algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import GraphMismatchError, LatticeTooLargeError
from .graphs import Graph

# Exhaustive enumeration walks all 2^|vertices| subsets; past this it refuses.
ENUMERATION_CUTOFF = 20


def _mask_of(graph: Graph, subset: Iterable[str]) -> int:
    idx = graph._vertex_index
    mask = 0
    for v in graph.vertex_subset(subset):
        mask |= 1 << idx[v]
    return mask


def _vertices_of_mask(graph: Graph, mask: int) -> frozenset[str]:
    return frozenset(v for v, i in graph._vertex_index.items() if (mask >> i) & 1)


def _is_hereditary_mask(graph: Graph, mask: int) -> bool:
    out = graph._out_masks
    for i in range(len(out)):
        if (mask >> i) & 1 and out[i] & ~mask:
            return False
    return True


def _is_saturated_mask(graph: Graph, mask: int) -> bool:
    out = graph._out_masks
    for i in range(len(out)):
        # only emitters are constrained; sinks have an empty out-mask
        if out[i] and not (mask >> i) & 1 and not out[i] & ~mask:
            return False
    return True


def _closure_mask(graph: Graph, mask: int) -> int:
    out = graph._out_masks
    n = len(out)
    while True:
        before = mask
        # forward absorption to a fixed point
        while True:
            grown = mask
            for i in range(n):
                if (mask >> i) & 1:
                    grown |= out[i]
            if grown == mask:
                break
            mask = grown
        # one saturation sweep
        for i in range(n):
            if out[i] and not (mask >> i) & 1 and not out[i] & ~mask:
                mask |= 1 << i
        if mask == before:
            return mask


def is_hereditary(graph: Graph, subset: Iterable[str]) -> bool:
    """True iff every edge leaving the set lands back inside it."""
    return _is_hereditary_mask(graph, _mask_of(graph, subset))


def is_saturated(graph: Graph, subset: Iterable[str]) -> bool:
    """True iff every emitter with all out-neighbours inside the set is inside too."""
    return _is_saturated_mask(graph, _mask_of(graph, subset))


@dataclass(frozen=True)
class HereditarySaturatedSet:
    """A vertex set that passes both predicates; checked at construction."""

    graph: Graph
    vertices: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        mask = _mask_of(self.graph, self.vertices)
        if not _is_hereditary_mask(self.graph, mask):
            raise ValueError(f"{sorted(self.vertices)} is not hereditary")
        if not _is_saturated_mask(self.graph, mask):
            raise ValueError(f"{sorted(self.vertices)} is not saturated")

    def __contains__(self, vertex: str) -> bool:
        return vertex in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def sorted_vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self.vertices))

    @property
    def is_everything(self) -> bool:
        return self.vertices == self.graph._vset


def hs_closure(graph: Graph, subset: Iterable[str]) -> HereditarySaturatedSet:
    """Smallest hereditary saturated superset of ``subset``.

    Computed as a fixed point alternating forward absorption with
    saturation sweeps; the two closure rules commute to the same least
    fixed point, the order is fixed only for determinism.
    """
    mask = _closure_mask(graph, _mask_of(graph, subset))
    return HereditarySaturatedSet(graph, _vertices_of_mask(graph, mask))


def enumerate_hs_sets(graph: Graph) -> list[HereditarySaturatedSet]:
    """Every hereditary saturated subset, sorted by (size, membership).

    Brute force over all 2^|vertices| subsets; exponential by design and
    guarded by ``ENUMERATION_CUTOFF``.
    """
    n = len(graph.vertices)
    if n > ENUMERATION_CUTOFF:
        raise LatticeTooLargeError(
            f"graph has {n} vertices; exhaustive enumeration is capped at {ENUMERATION_CUTOFF}"
        )
    out = graph._out_masks
    emitters = [i for i in range(n) if out[i]]
    hits = []
    for mask in range(1 << n):
        # hereditary + saturated together: an emitter is inside iff covered
        ok = True
        for i in emitters:
            inside = (mask >> i) & 1
            covered = not out[i] & ~mask
            if inside != covered:
                ok = False
                break
        if ok:
            hits.append(mask)
    sets = [HereditarySaturatedSet(graph, _vertices_of_mask(graph, m)) for m in hits]
    sets.sort(key=lambda h: (len(h.vertices), h.sorted_vertices()))
    return sets


def _require_same_graph(a: HereditarySaturatedSet, b: HereditarySaturatedSet) -> None:
    if a.graph != b.graph:
        raise GraphMismatchError("operands live over different graphs")


def hs_meet(a: HereditarySaturatedSet, b: HereditarySaturatedSet) -> HereditarySaturatedSet:
    """Lattice meet: the intersection (hereditary saturated again)."""
    _require_same_graph(a, b)
    return HereditarySaturatedSet(a.graph, a.vertices & b.vertices)


def hs_join(a: HereditarySaturatedSet, b: HereditarySaturatedSet) -> HereditarySaturatedSet:
    """Lattice join: the closure of the union."""
    _require_same_graph(a, b)
    return hs_closure(a.graph, a.vertices | b.vertices)
