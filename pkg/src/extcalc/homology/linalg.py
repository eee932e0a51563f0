"""Dense matrices over the prime field F_p."""
from __future__ import annotations

import numpy as np

from ..errors import InvalidParams


class FpMatrix:
    """A rows x cols matrix with entries reduced mod p."""

    __slots__ = ("data", "p")

    def __init__(self, data, p: int):
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim != 2:
            raise InvalidParams("FpMatrix needs a 2-d array")
        self.data = np.mod(arr, p)
        self.p = p

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p:
            raise InvalidParams("mixed characteristics")
        return FpMatrix(self.data @ other.data, self.p)

    def __eq__(self, other):
        return (isinstance(other, FpMatrix) and self.p == other.p
                and self.data.shape == other.data.shape
                and bool(np.array_equal(self.data, other.data)))

    def __repr__(self):
        return f"FpMatrix({self.rows}x{self.cols} over F_{self.p})"

    def is_zero(self) -> bool:
        return not self.data.any()

    def submatrix(self, rows, cols) -> "FpMatrix":
        return FpMatrix(self.data[np.ix_(list(rows), list(cols))], self.p)

    def rank(self) -> int:
        return rank_mod_p(self.data, self.p)

    def to_text(self) -> str:
        """``rows cols`` header followed by one line per row."""
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(int(x)) for x in row) for row in self.data]
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str, p: int) -> "FpMatrix":
        lines = text.strip().splitlines()
        rows, cols = (int(x) for x in lines[0].split())
        data = [[int(x) for x in ln.split()] for ln in lines[1:1 + rows]]
        return cls(np.array(data, dtype=np.int64).reshape(rows, cols), p)


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over F_p by row reduction."""
    m = np.mod(np.array(a, dtype=np.int64), p)
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(m[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, c]), -1, p)
        m[rank] = (m[rank] * inv) % p
        below = np.nonzero(m[rank + 1:, c])[0] + rank + 1
        if below.size:
            m[below] = (m[below] - np.outer(m[below, c], m[rank])) % p
        rank += 1
    return rank
