"""Dense linear algebra over GF(q) on integer-coded numpy matrices.

Gaussian elimination uses first-nonzero pivoting, so echelon forms, ranks
and intersection bases are identical across runs and platforms.
"""

from __future__ import annotations

import numpy as np

from .field import FiniteField


def as_matrix(field: FiniteField, rows) -> np.ndarray:
    m = np.asarray(rows, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if m.size and (m.min() < 0 or m.max() >= field.q):
        raise ValueError("matrix entries outside field range")
    return m


def rref(field: FiniteField, mat) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form.

    Returns (R, pivot_cols). Pivot search scans columns left to right and
    takes the first nonzero entry at or below the current row.
    """
    m = as_matrix(field, mat).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        m[r] = field.vec_mul(m[r], field.inv(int(m[r, c])))
        others = [i for i in range(rows) if i != r and m[i, c] != 0]
        if others:
            factors = m[others, c]
            m[others] = field.vec_sub(m[others], field.vec_mul(factors[:, None], m[r][None, :]))
        pivots.append(c)
        r += 1
    return m, pivots


def rank(field: FiniteField, mat) -> int:
    return len(rref(field, mat)[1])


def row_basis(field: FiniteField, mat) -> np.ndarray:
    """Canonical (RREF) basis of the row space, zero rows dropped."""
    r, pivots = rref(field, mat)
    return r[: len(pivots)]


def in_rowspace(field: FiniteField, mat, vec) -> bool:
    m = as_matrix(field, mat)
    v = as_matrix(field, vec)
    return rank(field, m) == rank(field, np.vstack([m, v]))


def rowspace_intersection(field: FiniteField, mat_a, mat_b) -> np.ndarray:
    """Basis of rowspace(A) ∩ rowspace(B) via the doubled-block elimination.

    Stack [[A A], [B 0]] and row-reduce; rows whose left half vanished carry
    intersection vectors in their right half.  Output is in RREF, so the
    basis is canonical.
    """
    a = as_matrix(field, mat_a)
    b = as_matrix(field, mat_b)
    if a.shape[1] != b.shape[1]:
        raise ValueError("column counts differ")
    n = a.shape[1]
    top = np.hstack([a, a])
    bot = np.hstack([b, np.zeros_like(b)])
    reduced, _ = rref(field, np.vstack([top, bot]))
    left_zero = ~reduced[:, :n].any(axis=1)
    nonzero_right = reduced[:, n:].any(axis=1)
    cand = reduced[left_zero & nonzero_right, n:]
    if cand.size == 0:
        return np.zeros((0, n), dtype=np.int64)
    return row_basis(field, cand)


def matmul(field: FiniteField, a, b) -> np.ndarray:
    """Matrix product over GF(q); inner dimension is looped (it is small here)."""
    a = as_matrix(field, a)
    b = as_matrix(field, b)
    if a.shape[1] != b.shape[0]:
        raise ValueError("shape mismatch")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for h in range(a.shape[1]):
        out = field.vec_add(out, field.vec_mul(a[:, h][:, None], b[h][None, :]))
    return out


def solve_consistent(field: FiniteField, a, rhs) -> bool:
    """True iff the linear system a @ x = rhs has a solution."""
    a = as_matrix(field, a)
    v = as_matrix(field, rhs).reshape(-1, 1)
    return rank(field, a) == rank(field, np.hstack([a, v]))
