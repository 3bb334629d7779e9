"""Matrix-block realization of the path algebra of a finite acyclic graph.

For a finite acyclic graph the path algebra over a field decomposes as one
full matrix block per sink, of size the number of paths ending at that
sink.  Concretely the basis consists of matrix units ``e[v; g, l]`` where
``v`` is a sink and ``g``, ``l`` are paths into ``v``, multiplying by

    e[v; g, l] * e[w; m, n] = (v == w and l == m) * e[v; g, n]

with the integer grading ``deg e[v; g, l] = len(g) - len(l)``.  Vertices,
edges and ghost edges of the graph all have explicit images on this basis,
and the defining relations of the algebra are audited at construction.
That makes the module a brute-force referee for the vertex-set calculus:
ideals, annihilators and gradedness are computed by genuine row reduction
over GF(p) with no graph-theoretic shortcuts.

Costs are polynomial in the algebra dimension but the dimension itself is
exponential-ish in graph size; intended inputs are desk-scale graphs,
capped at ``DEFAULT_DIMENSION_CAP``.
"""

from __future__ import annotations

import numpy as np

from .errors import OracleDimensionError, OracleUnsupportedError
from .gfp import (
    as_matrix,
    in_rowspace,
    is_prime,
    nullspace_from_rref,
    reduce_rowspace,
    residual,
    rref,
)
from .graphs import Graph

DEFAULT_DIMENSION_CAP = 2000

# cap on rows * dim * dim entries per batched product tensor (memory guard)
_BATCH_ENTRIES = 1 << 21


class OracleAlgebra:
    """Explicit finite-dimensional algebra over GF(p) for an acyclic graph.

    Use :func:`build_oracle` rather than constructing directly; the factory
    validates the graph, the prime and the dimension cap.
    """

    def __init__(self, graph: Graph, p: int):
        self.graph = graph
        self.p = p
        self.sinks = tuple(sorted(graph.sinks()))
        # per sink: all paths ending there as (edge-name tuple, source vertex),
        # the trivial path included, sorted by (length, names) for determinism
        self._paths: dict[str, list[tuple[tuple[str, ...], str]]] = {
            v: _paths_into(graph, v) for v in self.sinks
        }
        self._block_sizes = [len(self._paths[v]) for v in self.sinks]
        self.dimension = sum(n * n for n in self._block_sizes)

        offsets = []
        off = 0
        for n in self._block_sizes:
            offsets.append(off)
            off += n * n
        self._offsets = offsets
        self._path_index = {
            v: {names: i for i, (names, _src) in enumerate(self._paths[v])} for v in self.sinks
        }

        self.labels: list[tuple[str, tuple[str, ...], tuple[str, ...]]] = []
        degrees = np.zeros(self.dimension, dtype=np.int64)
        for b, v in enumerate(self.sinks):
            paths = self._paths[v]
            n = self._block_sizes[b]
            for i, (gi, _si) in enumerate(paths):
                for j, (lj, _sj) in enumerate(paths):
                    k = self._offsets[b] + i * n + j
                    self.labels.append((v, gi, lj))
                    degrees[k] = len(gi) - len(lj)
        self.degrees = degrees

        # structure triples: unit[ta] * unit[tb] = unit[tc]
        tas, tbs, tcs = [], [], []
        for b, n in enumerate(self._block_sizes):
            if n == 0:
                continue
            off = self._offsets[b]
            i, j, k = np.indices((n, n, n)).reshape(3, -1)
            tas.append(off + i * n + j)
            tbs.append(off + j * n + k)
            tcs.append(off + i * n + k)
        if tas:
            self._ta = np.concatenate(tas)
            self._tb = np.concatenate(tbs)
            self._tc = np.concatenate(tcs)
        else:
            self._ta = self._tb = self._tc = np.zeros(0, dtype=np.int64)

        self._vertex_images = {v: self._build_vertex_image(v) for v in graph.vertices}
        self._edge_images = {e.name: self._build_edge_image(e) for e in graph.edges}
        self._ghost_images = {e.name: self._build_ghost_image(e) for e in graph.edges}
        self._audit_relations()

    # -- element helpers -------------------------------------------------------

    def zero(self) -> np.ndarray:
        return np.zeros(self.dimension, dtype=np.int64)

    def identity(self) -> np.ndarray:
        out = self.zero()
        for b, n in enumerate(self._block_sizes):
            off = self._offsets[b]
            for i in range(n):
                out[off + i * n + i] = 1
        return out

    def vertex_image(self, vertex: str) -> np.ndarray:
        self.graph.require_vertex(vertex)
        return self._vertex_images[vertex].copy()

    def edge_image(self, name: str) -> np.ndarray:
        return self._edge_images[name].copy()

    def ghost_image(self, name: str) -> np.ndarray:
        return self._ghost_images[name].copy()

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        out = self.zero()
        if self._ta.size:
            np.add.at(out, self._tc, x[self._ta] * y[self._tb])
        return out % self.p

    def product_rows(self, rows: np.ndarray):
        """Yield stacked products (unit * row and row * unit) in memory-bounded batches.

        For a batch of t rows the yielded matrix has 2 * t * dim rows: first
        the left products of each row by every matrix unit, then the right
        products.
        """
        dim = self.dimension
        if dim == 0 or rows.shape[0] == 0:
            return
        step = max(1, _BATCH_ENTRIES // (dim * dim))
        for start in range(0, rows.shape[0], step):
            block = rows[start : start + step]
            t = block.shape[0]
            left = np.zeros((t, dim, dim), dtype=np.int64)
            right = np.zeros((t, dim, dim), dtype=np.int64)
            if self._ta.size:
                # matrix-unit products copy single coordinates, so plain
                # fancy assignment suffices (no accumulation happens)
                left[:, self._ta, self._tc] = block[:, self._tb]
                right[:, self._tb, self._tc] = block[:, self._ta]
            prods = np.concatenate([left.reshape(-1, dim), right.reshape(-1, dim)])
            prods = prods[prods.any(axis=1)]
            if prods.shape[0]:
                yield prods

    def annihilator_constraints(self, rows: np.ndarray):
        """Yield constraint rows for {a : a*x = x*a = 0 for x in rows}.

        For each x the equations (a*x)_k = 0 and (x*a)_k = 0 are linear in
        the coordinates of a; the yielded matrices hold them as rows.
        """
        dim = self.dimension
        if dim == 0 or rows.shape[0] == 0:
            return
        step = max(1, _BATCH_ENTRIES // (dim * dim))
        for start in range(0, rows.shape[0], step):
            block = rows[start : start + step]
            t = block.shape[0]
            left = np.zeros((t, dim, dim), dtype=np.int64)
            right = np.zeros((t, dim, dim), dtype=np.int64)
            if self._ta.size:
                # left[s, i, k] = (unit_i * x_s)[k];  right[s, i, k] = (x_s * unit_i)[k]
                left[:, self._ta, self._tc] = block[:, self._tb]
                right[:, self._tb, self._tc] = block[:, self._ta]
            cons = np.concatenate(
                [
                    left.transpose(0, 2, 1).reshape(-1, dim),
                    right.transpose(0, 2, 1).reshape(-1, dim),
                ]
            )
            cons = cons[cons.any(axis=1)]
            if cons.shape[0]:
                yield cons

    def homogeneous_component(self, x: np.ndarray, degree: int) -> np.ndarray:
        return np.where(self.degrees == degree, x % self.p, 0)

    # -- construction internals ------------------------------------------------

    def _unit(self, block: int, i: int, j: int) -> int:
        n = self._block_sizes[block]
        return self._offsets[block] + i * n + j

    def _build_vertex_image(self, vertex: str) -> np.ndarray:
        out = self.zero()
        for b, v in enumerate(self.sinks):
            for i, (_names, src) in enumerate(self._paths[v]):
                if src == vertex:
                    out[self._unit(b, i, i)] = 1
        return out

    def _build_edge_image(self, edge) -> np.ndarray:
        out = self.zero()
        for b, v in enumerate(self.sinks):
            index = self._path_index[v]
            for j, (names, src) in enumerate(self._paths[v]):
                if src == edge.dst:
                    i = index[(edge.name,) + names]
                    out[self._unit(b, i, j)] = 1
        return out

    def _build_ghost_image(self, edge) -> np.ndarray:
        out = self.zero()
        for b, v in enumerate(self.sinks):
            index = self._path_index[v]
            for j, (names, src) in enumerate(self._paths[v]):
                if src == edge.dst:
                    i = index[(edge.name,) + names]
                    out[self._unit(b, j, i)] = 1
        return out

    def _audit_relations(self) -> None:
        """Check the defining relations on every generator image; bugs abort."""
        g = self.graph
        vi = self._vertex_images
        for u in g.vertices:
            for w in g.vertices:
                expect = vi[u] if u == w else self.zero()
                if not np.array_equal(self.mul(vi[u], vi[w]), expect):
                    raise RuntimeError(f"vertex idempotents not orthogonal at ({u}, {w})")
        for e in g.edges:
            img = self._edge_images[e.name]
            ghost = self._ghost_images[e.name]
            if not np.array_equal(self.mul(vi[e.src], img), img) or not np.array_equal(
                self.mul(img, vi[e.dst]), img
            ):
                raise RuntimeError(f"source/range relation fails for edge {e.name}")
            if not np.array_equal(self.mul(vi[e.dst], ghost), ghost) or not np.array_equal(
                self.mul(ghost, vi[e.src]), ghost
            ):
                raise RuntimeError(f"ghost source/range relation fails for edge {e.name}")
        for e in g.edges:
            for f in g.edges:
                expect = vi[e.dst] if e.name == f.name else self.zero()
                got = self.mul(self._ghost_images[e.name], self._edge_images[f.name])
                if not np.array_equal(got, expect):
                    raise RuntimeError(f"ghost-edge relation fails at ({e.name}, {f.name})")
        for v in sorted(g.regular_vertices()):
            acc = self.zero()
            for e in g.out_edges(v):
                acc = (acc + self.mul(self._edge_images[e.name], self._ghost_images[e.name])) % self.p
            if not np.array_equal(acc, vi[v]):
                raise RuntimeError(f"range-decomposition relation fails at vertex {v}")
        total = self.zero()
        for v in g.vertices:
            total = (total + vi[v]) % self.p
        if not np.array_equal(total, self.identity()):
            raise RuntimeError("vertex idempotents do not sum to the identity")


def _paths_into(graph: Graph, sink: str) -> list[tuple[tuple[str, ...], str]]:
    done = []
    stack: list[tuple[tuple[str, ...], str]] = [((), sink)]
    while stack:
        names, src = stack.pop()
        done.append((names, src))
        for e in graph.in_edges(src):
            stack.append(((e.name,) + names, e.src))
    done.sort(key=lambda item: (len(item[0]), item[0]))
    return done


def build_oracle(graph: Graph, p: int, dimension_cap: int = DEFAULT_DIMENSION_CAP) -> OracleAlgebra:
    """Validated construction of the matrix oracle for an acyclic graph."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not graph.is_acyclic():
        raise OracleUnsupportedError("the matrix oracle covers acyclic graphs only")
    dim = 0
    for v in sorted(graph.sinks()):
        n = len(_paths_into(graph, v))
        dim += n * n
        if dim > dimension_cap:
            raise OracleDimensionError(
                f"oracle dimension exceeds the cap of {dimension_cap}"
            )
    return OracleAlgebra(graph, p)


class Subspace:
    """Row space over GF(p), stored in canonical reduced echelon form."""

    def __init__(self, algebra: OracleAlgebra, vectors):
        self.algebra = algebra
        mat = as_matrix(vectors, algebra.dimension)
        self.basis, self.pivots = rref(mat, algebra.p)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def is_everything(self) -> bool:
        return self.dim == self.algebra.dimension

    def contains(self, vectors) -> bool:
        return in_rowspace(
            as_matrix([vectors] if np.ndim(vectors) == 1 else vectors, self.algebra.dimension),
            self.basis,
            self.pivots,
            self.algebra.p,
        )

    def signature(self) -> bytes:
        return self.basis.shape[0].to_bytes(4, "big") + self.basis.tobytes()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.algebra.p == other.algebra.p
            and self.algebra.graph == other.algebra.graph
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.algebra.p, self.signature()))


class IdealSubspace(Subspace):
    """Subspace verified closed under two-sided multiplication by the basis units."""

    def __init__(self, algebra: OracleAlgebra, vectors):
        super().__init__(algebra, vectors)
        if self.is_everything:
            return  # the full space is trivially closed
        for prods in algebra.product_rows(self.basis):
            if residual(prods, self.basis, self.pivots, algebra.p).any():
                raise ValueError("subspace is not closed under two-sided multiplication")


def ideal_generated_by(algebra: OracleAlgebra, generators) -> IdealSubspace:
    """Least two-sided ideal containing the generators.

    Iterated row reduction to a fixed point: multiply the current basis by
    every matrix unit on both sides, keep what falls outside the span,
    re-reduce, repeat.  Reaching full rank ends the search early since the
    whole algebra is an ideal.
    """
    dim = algebra.dimension
    basis, pivots = reduce_rowspace(as_matrix(generators, dim), algebra.p, stop_rank=dim)
    while len(pivots) < dim:
        fresh = []
        for prods in algebra.product_rows(basis):
            out = residual(prods, basis, pivots, algebra.p)
            out = out[out.any(axis=1)]
            if out.shape[0]:
                fresh.append(out)
        if not fresh:
            break
        basis, pivots = reduce_rowspace(
            np.vstack([basis] + fresh), algebra.p, stop_rank=dim
        )
    return IdealSubspace(algebra, basis)


def perp_subspace(algebra: OracleAlgebra, ideal: IdealSubspace) -> IdealSubspace:
    """Two-sided annihilator {a : a*x = x*a = 0 for all x in the ideal}.

    Solved as the nullspace of the stacked linear constraints coming from
    each basis element of the ideal; the result is verified to be an ideal.
    """
    dim = algebra.dimension
    basis = np.zeros((0, dim), dtype=np.int64)
    pivots: tuple[int, ...] = ()
    for cons in algebra.annihilator_constraints(ideal.basis):
        keep = residual(cons, basis, pivots, algebra.p)
        keep = keep[keep.any(axis=1)]
        if keep.shape[0]:
            basis, pivots = reduce_rowspace(
                np.vstack([basis, keep]), algebra.p, stop_rank=dim
            )
        if len(pivots) == dim:
            break
    return IdealSubspace(algebra, nullspace_from_rref(basis, pivots, algebra.p, dim))


def vertex_set_of(algebra: OracleAlgebra, subspace: Subspace) -> frozenset[str]:
    """Vertices whose generator image lies in the subspace."""
    return frozenset(
        v for v in algebra.graph.vertices if subspace.contains(algebra.vertex_image(v))
    )


def is_graded_subspace(algebra: OracleAlgebra, subspace: Subspace) -> bool:
    """True iff each homogeneous component of each basis element stays inside."""
    for row in subspace.basis:
        present = np.unique(algebra.degrees[row != 0])
        for d in present:
            if not subspace.contains(algebra.homogeneous_component(row, int(d))):
                return False
    return True
