"""Exact rank computation over Z/p with a streaming reduced row basis.

Row blocks arrive incrementally; the accumulator keeps a basis in reduced
row echelon form so reducing a new block against it is a single matrix
product.  Products run through float64 BLAS in chunks small enough that
every intermediate integer stays below 2^53, which keeps the arithmetic
exact while being far faster than integer matmul.
"""

from __future__ import annotations

import numpy as np

# Largest k-dimension of one exact float64 product: k * (p-1)^2 < 2^53.
# With the default p around 10^6 this allows k up to ~9000; we stay below.
_CHUNK = 8192

# matmul_mod is exact for any p with (p-1)^2 < 2^53 (chunk length 1 in the
# worst case); the config layer enforces a much smaller p anyway.
P_LIMIT = 94_906_265


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """(a @ b) % p for int64 matrices with entries in [0, p)."""
    a = np.ascontiguousarray(a, np.int64)
    b = np.ascontiguousarray(b, np.int64)
    m, k = a.shape
    k2, ncols = b.shape
    if k != k2:
        raise ValueError(f"shape mismatch: {a.shape} @ {b.shape}")
    out = np.zeros((m, ncols), np.int64)
    if 0 in (m, k, ncols):
        return out
    step = min(_CHUNK, max(1, (1 << 53) // max(1, (p - 1) ** 2)))
    for lo in range(0, k, step):
        prod = a[:, lo : lo + step].astype(np.float64) @ b[lo : lo + step].astype(
            np.float64
        )
        out += prod.astype(np.int64) % p
    out %= p
    return out


class RankAccumulator:
    """Streaming row-rank over Z/p.

    The basis invariant: every stored row has a unit leading entry at its
    pivot column and zeros at every other pivot column (full RREF), so new
    rows are reduced by one product with the pivot-column coefficients.
    """

    def __init__(self, ncols: int, p: int):
        if ncols < 0:
            raise ValueError(f"need ncols >= 0, got {ncols}")
        if p < 3:
            raise ValueError(f"need an odd prime modulus, got {p}")
        self.ncols = ncols
        self.p = p
        self.basis = np.zeros((0, ncols), np.int64)
        self.pivots = np.zeros(0, np.int64)

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    def add_rows(self, rows: np.ndarray) -> None:
        p = self.p
        rows = np.atleast_2d(np.asarray(rows, np.int64)) % p
        if rows.shape[1] != self.ncols:
            raise ValueError(f"rows have {rows.shape[1]} columns, want {self.ncols}")
        if self.rank:
            coeffs = rows[:, self.pivots]
            if coeffs.any():
                rows = (rows - matmul_mod(coeffs, self.basis, p)) % p

        new_rows: list[np.ndarray] = []
        new_pivots: list[int] = []
        for row in rows:
            for w, c in zip(new_rows, new_pivots):
                f = int(row[c])
                if f:
                    row = (row - f * w) % p
            nz = row.nonzero()[0]
            if nz.size == 0:
                continue
            c = int(nz[0])
            row = (row * pow(int(row[c]), -1, p)) % p
            new_rows.append(row)
            new_pivots.append(c)
        if not new_rows:
            return

        block = np.vstack(new_rows)
        pivots = np.asarray(new_pivots, np.int64)
        # Back pass: clear later pivot columns out of earlier block rows.
        for i in range(block.shape[0] - 2, -1, -1):
            coef = block[i, pivots[i + 1 :]]
            nz = coef.nonzero()[0]
            if nz.size:
                block[i] = (block[i] - coef[nz] @ block[i + 1 :][nz]) % p
        if self.rank:
            coeffs = self.basis[:, pivots]
            if coeffs.any():
                self.basis = (self.basis - matmul_mod(coeffs, block, p)) % p
        self.basis = np.vstack([self.basis, block])
        self.pivots = np.concatenate([self.pivots, pivots])


def rank_of(matrix: np.ndarray, p: int) -> int:
    """Rank of a dense int matrix over Z/p."""
    matrix = np.atleast_2d(np.asarray(matrix, np.int64))
    acc = RankAccumulator(matrix.shape[1], p)
    step = max(1, 2_000_000 // max(1, matrix.shape[1]))
    for lo in range(0, matrix.shape[0], step):
        acc.add_rows(matrix[lo : lo + step])
        if acc.rank == matrix.shape[1]:
            break
    return acc.rank
