"""Exact linear algebra over F_p on numpy int64 arrays.

Coefficients are residues in [0, p).  Matrix products are chunked along the
contraction axis whenever k * (p-1)^2 could overflow int64, so any prime
accepted by FieldSpec is safe.
"""

from __future__ import annotations

import numpy as np


def as_mod_array(A, p: int) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    return np.mod(A, p)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def mat_mul(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """(A @ B) mod p without int64 overflow."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    k = A.shape[-1]
    if k == 0:
        return np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
    chunk = max(1, int((1 << 62) // ((p - 1) * (p - 1))))
    if k <= chunk:
        return np.mod(A @ B, p)
    out = np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
    for s in range(0, k, chunk):
        out = np.mod(out + A[..., s:s + chunk] @ B[s:s + chunk], p)
    return out


def mat_vec(A: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    return mat_mul(A, np.asarray(v, dtype=np.int64).reshape(-1, 1), p).ravel()


def rref(A, p: int):
    """Reduced row echelon form.

    Returns (R, pivots) where R is fully reduced with monic pivots and
    pivots lists the pivot column of each nonzero row, in order.
    """
    A = as_mod_array(A, p).copy()
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = A[r] * inv % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            A[rows] = np.mod(A[rows] - np.outer(col[rows], A[r]), p)
        pivots.append(c)
        r += 1
    return A, pivots


def rank(A, p: int) -> int:
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A, p: int) -> np.ndarray:
    """Basis of the right kernel, one vector per row."""
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2:
        raise ValueError("need a 2d array")
    m, n = A.shape
    if m == 0:
        return identity(n)
    R, pivots = rref(A, p)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
    if pivots and free:
        # solve pivot coordinates from the free ones
        basis[:, pivots] = np.mod(-R[: len(pivots), free].T, p)
    return basis


def solve(A, b, p: int):
    """One solution of A x = b, or None when inconsistent."""
    A = as_mod_array(A, p)
    b = as_mod_array(b, p).reshape(-1, 1)
    m, n = A.shape
    R, pivots = rref(np.hstack([A, b]), p)
    for i in range(len(pivots)):
        if pivots[i] == n:
            return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = R[i, n]
    return x


class RowBasis:
    """Incremental row span in full reduced echelon form.

    With ntrack > 0, every inserted vector carries a fresh tracking
    coordinate, and a dependent insert returns the dependency: a vector r of
    length ntrack with r[k] the coefficient of the k-th inserted row,
    normalized so the current row has coefficient 1.  Dependencies returned
    across a run of inserts are linearly independent by construction.
    """

    def __init__(self, ncols: int, p: int, ntrack: int = 0):
        self.p = p
        self.ncols = ncols
        self.ntrack = ntrack
        self._cap = 16
        self._rows = np.zeros((self._cap, ncols + ntrack), dtype=np.int64)
        self._n = 0
        self.pivots: list = []
        self._inserted = 0

    @property
    def dim(self) -> int:
        return self._n

    def matrix(self) -> np.ndarray:
        """Current basis rows (payload part only)."""
        return self._rows[: self._n, : self.ncols].copy()

    def _grow(self):
        self._cap *= 2
        rows = np.zeros((self._cap, self.ncols + self.ntrack), dtype=np.int64)
        rows[: self._n] = self._rows[: self._n]
        self._rows = rows

    def reduce(self, v) -> np.ndarray:
        """Normal form of v against the current span; no insertion."""
        w = np.zeros(self.ncols + self.ntrack, dtype=np.int64)
        w[: self.ncols] = as_mod_array(v, self.p)
        return self._reduce_full(w)[: self.ncols]

    def _reduce_full(self, w: np.ndarray) -> np.ndarray:
        if self._n and self.pivots:
            coeffs = w[self.pivots]
            if np.any(coeffs):
                w = np.mod(w - mat_mul(coeffs, self._rows[: self._n], self.p), self.p)
        return w

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v))

    def insert(self, v):
        """Insert v; returns (row_index, None) or (-1, dependency)."""
        p = self.p
        k = self._inserted
        if self.ntrack and k >= self.ntrack:
            raise ValueError("more inserts than tracking slots")
        w = np.zeros(self.ncols + self.ntrack, dtype=np.int64)
        w[: self.ncols] = as_mod_array(v, p)
        if self.ntrack:
            w[self.ncols + k] = 1
        self._inserted = k + 1
        w = self._reduce_full(w)
        payload = w[: self.ncols]
        nz = np.nonzero(payload)[0]
        if nz.size == 0:
            return -1, (w[self.ncols:].copy() if self.ntrack else None)
        piv = int(nz[0])
        w = w * pow(int(w[piv]), p - 2, p) % p
        # clear the new pivot from existing rows to keep full reduction
        if self._n:
            col = self._rows[: self._n, piv].copy()
            rows = np.nonzero(col)[0]
            if rows.size:
                self._rows[rows] = np.mod(self._rows[rows] - np.outer(col[rows], w), p)
        if self._n == self._cap:
            self._grow()
        self._rows[self._n] = w
        self.pivots.append(piv)
        self._n += 1
        return self._n - 1, None


def kernel_intersection(blocks, dim: int, p: int) -> np.ndarray:
    """Basis of the intersection of kernels of an iterable of matrices.

    Each block is a 2d array with dim columns.  The running solution basis N
    shrinks monotonically; blocks are applied to N rather than stacked, which
    keeps the work proportional to the current solution dimension.
    """
    N = identity(dim)
    for H in blocks:
        if N.shape[0] == 0:
            break
        HN = mat_mul(np.asarray(H, dtype=np.int64), N.T, p)
        if not np.any(HN):
            continue
        C = nullspace(HN, p)
        N = mat_mul(C, N, p)
    return N
