"""Exact dense linear algebra over GF(p) on numpy int64 arrays.

Row spaces are kept in reduced row echelon form, which is canonical: two
subspaces are equal iff their RREF matrices are equal, so RREF bytes double
as subspace signatures.  Because the form is fully reduced, reducing a
vector against a basis is a single matrix product, not a pivot loop.
"""

from __future__ import annotations

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def as_matrix(rows, width: int) -> np.ndarray:
    """Stack vectors into an (n, width) int64 matrix; handles the empty case."""
    rows = list(rows)
    if not rows:
        return np.zeros((0, width), dtype=np.int64)
    mat = np.array(rows, dtype=np.int64)
    if mat.ndim == 1:
        mat = mat.reshape(1, -1)
    if mat.shape[1] != width:
        raise ValueError(f"expected width {width}, got {mat.shape[1]}")
    return mat


def rref(matrix: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form over GF(p); zero rows dropped.

    Returns (R, pivot_columns); len(pivot_columns) is the rank.
    """
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        hit = a[:, c] != 0
        hit[r] = False
        if hit.any():
            a[hit] = (a[hit] - np.outer(a[hit, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], tuple(pivots)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact (a @ b) % p.

    Routes through float64 BLAS when the products provably stay inside the
    exact-integer range of float64; numpy's plain int64 matmul is a naive
    loop and far slower.
    """
    inner = a.shape[1]
    if inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if inner * (p - 1) * (p - 1) < 2**53:
        prod = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    else:
        prod = a @ b
    return prod % p


def residual(vectors, basis: np.ndarray, pivots: tuple[int, ...], p: int) -> np.ndarray:
    """Reduce vectors against an RREF basis; zero rows mean membership.

    One-shot: basis rows vanish on each other's pivot columns, so the whole
    reduction is vectors - vectors[:, pivots] @ basis.
    """
    v = np.array(vectors, dtype=np.int64) % p
    if v.ndim == 1:
        v = v.reshape(1, -1)
    if not pivots or v.shape[0] == 0:
        return v
    coef = v[:, np.fromiter(pivots, dtype=np.int64)]
    if coef.any():
        v = (v - matmul_mod(coef, basis, p)) % p
    return v


def in_rowspace(vectors, basis: np.ndarray, pivots: tuple[int, ...], p: int) -> bool:
    return not residual(vectors, basis, pivots, p).any()


def reduce_rowspace(
    matrix: np.ndarray,
    p: int,
    stop_rank: int | None = None,
    chunk: int = 256,
) -> tuple[np.ndarray, tuple[int, ...]]:
    """RREF of a (possibly tall) matrix, processed in chunks.

    Each chunk is first reduced against the basis built so far, which keeps
    the inner eliminations small; once the rank reaches ``stop_rank`` the
    remaining rows cannot contribute and are skipped.
    """
    mat = np.array(matrix, dtype=np.int64)
    if mat.ndim == 1:
        mat = mat.reshape(1, -1)
    basis = np.zeros((0, mat.shape[1]), dtype=np.int64)
    pivots: tuple[int, ...] = ()
    for start in range(0, mat.shape[0], chunk):
        if stop_rank is not None and len(pivots) >= stop_rank:
            break
        res = residual(mat[start : start + chunk], basis, pivots, p)
        fresh = res[res.any(axis=1)]
        if fresh.shape[0]:
            basis, pivots = rref(np.vstack([basis, fresh]), p)
    return basis, pivots


def nullspace_from_rref(
    basis: np.ndarray, pivots: tuple[int, ...], p: int, cols: int
) -> np.ndarray:
    """RREF basis of the right kernel, given the RREF of the matrix."""
    free = [c for c in range(cols) if c not in set(pivots)]
    if not free:
        return np.zeros((0, cols), dtype=np.int64)
    out = np.zeros((len(free), cols), dtype=np.int64)
    for k, c in enumerate(free):
        out[k, c] = 1
        for j, pc in enumerate(pivots):
            out[k, pc] = (-int(basis[j, c])) % p
    reduced, _ = rref(out, p)
    return reduced


def nullspace(matrix: np.ndarray, p: int) -> np.ndarray:
    """RREF basis of {x : matrix @ x = 0} over GF(p)."""
    mat = np.array(matrix, dtype=np.int64)
    red, piv = reduce_rowspace(mat, p, stop_rank=mat.shape[1])
    return nullspace_from_rref(red, piv, p, mat.shape[1])
