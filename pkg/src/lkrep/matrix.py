"""Square matrices over an exact coefficient ring, stored sparsely by row.

Entries may be any ring elements supporting ``+``, ``-``, ``*``, truthiness
(falsy means zero) and, for the determinant, ``exact_div``.  Zero entries are
never stored, so dict equality is matrix equality.
"""

from __future__ import annotations

from typing import Callable, Sequence


class RingMatrix:
    __slots__ = ("n", "rows", "zero")

    def __init__(self, n: int, rows: list[dict], zero):
        self.n = n
        self.rows = rows
        self.zero = zero

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, n: int, zero) -> "RingMatrix":
        return cls(n, [{} for _ in range(n)], zero)

    @classmethod
    def identity(cls, n: int, one, zero) -> "RingMatrix":
        return cls(n, [{i: one} for i in range(n)], zero)

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence], zero) -> "RingMatrix":
        n = len(entries)
        rows = []
        for row in entries:
            assert len(row) == n
            rows.append({j: v for j, v in enumerate(row) if v})
        return cls(n, rows, zero)

    # -- access ------------------------------------------------------------

    def entry(self, i: int, j: int):
        return self.rows[i].get(j, self.zero)

    def column(self, j: int) -> dict:
        return {i: row[j] for i, row in enumerate(self.rows) if j in row}

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows)

    def dense(self) -> list[list]:
        z = self.zero
        return [[row.get(j, z) for j in range(self.n)] for row in self.rows]

    def key(self) -> tuple:
        """Hashable canonical form (entries carry their own canonical keys)."""
        return tuple(
            (i, j, v.key()) for i, row in enumerate(self.rows) for j, v in sorted(row.items())
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.key())

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        assert self.n == other.n
        rows = []
        for a, b in zip(self.rows, other.rows):
            row = dict(a)
            for j, v in b.items():
                s = row.get(j)
                s = v if s is None else s + v
                if s:
                    row[j] = s
                else:
                    row.pop(j, None)
            rows.append(row)
        return RingMatrix(self.n, rows, self.zero)

    def __neg__(self) -> "RingMatrix":
        return RingMatrix(self.n, [{j: -v for j, v in row.items()} for row in self.rows], self.zero)

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        return self + (-other)

    def __mul__(self, other: "RingMatrix") -> "RingMatrix":
        assert self.n == other.n
        brows = other.rows
        rows: list[dict] = []
        for arow in self.rows:
            acc: dict = {}
            for k, a in arow.items():
                brow = brows[k]
                for j, b in brow.items():
                    p = a * b
                    if not p:
                        continue
                    s = acc.get(j)
                    s = p if s is None else s + p
                    if s:
                        acc[j] = s
                    else:
                        del acc[j]
            rows.append(acc)
        return RingMatrix(self.n, rows, self.zero)

    def scaled(self, c) -> "RingMatrix":
        rows = []
        for row in self.rows:
            out = {}
            for j, v in row.items():
                p = c * v
                if p:
                    out[j] = p
            rows.append(out)
        return RingMatrix(self.n, rows, self.zero)

    def map_entries(self, f: Callable, zero=None) -> "RingMatrix":
        """Apply ``f`` to every stored entry, dropping images that are zero."""
        z = self.zero if zero is None else zero
        rows = []
        for row in self.rows:
            out = {}
            for j, v in row.items():
                w = f(v)
                if w:
                    out[j] = w
            rows.append(out)
        return RingMatrix(self.n, rows, z)

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product; the vector is indexed like the columns."""
        assert len(vec) == self.n
        out = []
        for row in self.rows:
            acc = self.zero
            for j, v in row.items():
                x = vec[j]
                if x:
                    acc = acc + v * x
            out.append(acc)
        return out

    # -- determinant -----------------------------------------------------------

    def det_fraction_free(self):
        """Exact determinant via fraction-free (Bareiss) elimination.

        Every division performed is exact in the coefficient ring, so no
        fractions ever appear; entries must provide ``exact_div``.
        """
        n = self.n
        if n == 0:
            raise ValueError("determinant of an empty matrix")
        z = self.zero
        m = self.dense()
        negate = False
        prev = None
        for k in range(n - 1):
            if not m[k][k]:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        negate = not negate
                        break
                else:
                    return z
            pivot = m[k][k]
            for i in range(k + 1, n):
                mik = m[i][k]
                for j in range(k + 1, n):
                    num = pivot * m[i][j] - mik * m[k][j]
                    if prev is None:
                        m[i][j] = num
                    elif num:
                        m[i][j] = num.exact_div(prev)
                    else:
                        m[i][j] = z
                m[i][k] = z
            prev = pivot
        det = m[n - 1][n - 1]
        return -det if negate else det

    def __repr__(self) -> str:
        return f"RingMatrix(n={self.n}, nnz={self.nnz()})"
