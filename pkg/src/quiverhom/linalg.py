"""Exact dense linear algebra over a prime field GF(p).

Matrices are numpy int64 arrays with all entries reduced modulo p.
Everything here is integer arithmetic; there is no floating point and
no tolerance anywhere.
"""

from __future__ import annotations

import numpy as np

__all__ = ["GF", "is_prime"]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class GF:
    """The prime field GF(p) together with its dense matrix routines.

    All methods are pure: inputs are never mutated, outputs are fresh
    arrays, so field objects are safe to share across concurrent tasks.
    """

    # int64 accumulation in a matrix product is exact while
    # cols * (p-1)^2 < 2^63; this cap leaves orders of magnitude of slack
    # at the matrix sizes in scope.
    MAX_CHARACTERISTIC = 2**20

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"field characteristic must be prime, got {p}")
        if p > self.MAX_CHARACTERISTIC:
            raise ValueError(
                f"characteristic {p} exceeds exact-arithmetic bound {self.MAX_CHARACTERISTIC}"
            )
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"

    # -- construction -------------------------------------------------

    def mat(self, rows) -> np.ndarray:
        m = np.asarray(rows, dtype=np.int64)
        if m.ndim == 1:
            m = m.reshape(1, -1)
        return m % self.p

    def vec(self, entries) -> np.ndarray:
        return np.asarray(entries, dtype=np.int64).reshape(-1) % self.p

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    # -- arithmetic ----------------------------------------------------

    def inv_scalar(self, x: int) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return pow(x, self.p - 2, self.p)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a @ b) % self.p

    def rref(self, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and the ordered pivot column indices."""
        r = (np.array(m, dtype=np.int64) % self.p).copy()
        rows, cols = r.shape
        pivots: list[int] = []
        lead = 0
        for c in range(cols):
            if lead >= rows:
                break
            nz = np.nonzero(r[lead:, c])[0]
            if nz.size == 0:
                continue
            k = lead + int(nz[0])
            if k != lead:
                r[[lead, k]] = r[[k, lead]]
            r[lead] = (r[lead] * self.inv_scalar(r[lead, c])) % self.p
            col = r[:, c].copy()
            col[lead] = 0
            r = (r - np.outer(col, r[lead])) % self.p
            pivots.append(c)
            lead += 1
        return r, pivots

    def rank(self, m: np.ndarray) -> int:
        if m.shape[0] == 0 or m.shape[1] == 0:
            return 0
        return len(self.rref(m)[1])

    def kernel_basis(self, m: np.ndarray) -> list[np.ndarray]:
        """Basis of the right kernel {v : m @ v = 0}, one vector per free column."""
        rows, cols = m.shape
        if cols == 0:
            return []
        if rows == 0:
            return [self.eye(cols)[:, j] for j in range(cols)]
        r, pivots = self.rref(m)
        free = [c for c in range(cols) if c not in pivots]
        basis = []
        for f in free:
            v = np.zeros(cols, dtype=np.int64)
            v[f] = 1
            for i, c in enumerate(pivots):
                v[c] = (-r[i, f]) % self.p
            basis.append(v)
        return basis

    def kernel_matrix(self, m: np.ndarray) -> np.ndarray:
        """Kernel basis packed as columns; shape (cols, dim ker)."""
        basis = self.kernel_basis(m)
        if not basis:
            return np.zeros((m.shape[1], 0), dtype=np.int64)
        return np.column_stack(basis)

    def solve(self, m: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        """Some x with m @ x = b, or None when the system is inconsistent."""
        b = np.asarray(b, dtype=np.int64).reshape(-1) % self.p
        if b.shape[0] != m.shape[0]:
            raise ValueError(
                f"dimension mismatch: matrix has {m.shape[0]} rows, vector has {b.shape[0]}"
            )
        x = self.solve_matrix(m, b.reshape(-1, 1))
        return None if x is None else x[:, 0]

    def solve_matrix(self, a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        """Some X with a @ X = b (columnwise), or None if any column is inconsistent."""
        if b.shape[0] != a.shape[0]:
            raise ValueError(
                f"dimension mismatch: {a.shape[0]} rows vs {b.shape[0]} rows"
            )
        rows, cols = a.shape
        width = b.shape[1]
        if width == 0:
            return np.zeros((cols, 0), dtype=np.int64)
        if rows == 0:
            return np.zeros((cols, width), dtype=np.int64)
        r, pivots = self.rref(np.hstack([a, b]))
        if any(p >= cols for p in pivots):
            return None
        x = np.zeros((cols, width), dtype=np.int64)
        for i, c in enumerate(pivots):
            x[c] = r[i, cols:]
        return x

    def inverse(self, m: np.ndarray) -> np.ndarray | None:
        """Inverse of a square matrix, or None when singular."""
        n = m.shape[0]
        if m.shape[1] != n:
            raise ValueError(f"inverse of non-square matrix {m.shape}")
        if n == 0:
            return np.zeros((0, 0), dtype=np.int64)
        r, pivots = self.rref(np.hstack([m, self.eye(n)]))
        if len(pivots) < n or pivots[-1] >= n:
            return None
        return r[:, n:]

    def is_invertible(self, m: np.ndarray) -> bool:
        return m.shape[0] == m.shape[1] and self.rank(m) == m.shape[0]
