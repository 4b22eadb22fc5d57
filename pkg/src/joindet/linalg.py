"""Exact integer matrices: Bareiss determinants, products, sandwich powers."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .errors import PreconditionError


class IntMatrix:
    """Dense immutable matrix of Python ints, stored row-major as tuples."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]]):
        data = tuple(tuple(int(x) for x in row) for row in entries)
        if not data or not data[0]:
            raise PreconditionError("matrix must have at least one row and column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise PreconditionError("ragged matrix rows")
        self.rows = len(data)
        self.cols = width
        self.entries = data

    @classmethod
    def identity(cls, k: int) -> "IntMatrix":
        return cls.diagonal([1] * k)

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        k = len(values)
        return cls([[values[i] if i == l else 0 for l in range(k)] for i in range(k)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "IntMatrix":
        return cls([[0] * (rows if cols is None else cols) for _ in range(rows)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, l = idx
        return self.entries[i][l]

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return mat_mul(self, other)

    def __mul__(self, n: int) -> "IntMatrix":
        return IntMatrix([[n * x for x in row] for row in self.entries])

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def to_text(self) -> str:
        return "".join(" ".join(str(x) for x in row) + "\n" for row in self.entries)

    def to_json(self) -> str:
        return json.dumps({"rows": self.rows, "cols": self.cols, "entries": self.tolist()},
                          separators=(",", ":"))

    @classmethod
    def from_text(cls, text: str) -> "IntMatrix":
        return cls([[int(t) for t in line.split()] for line in text.splitlines() if line.strip()])

    @classmethod
    def from_json(cls, text: str) -> "IntMatrix":
        doc = json.loads(text)
        m = cls(doc["entries"])
        if m.shape != (doc["rows"], doc["cols"]):
            raise PreconditionError("declared shape does not match entries")
        return m

    def __repr__(self):
        return f"IntMatrix({self.tolist()})"


def _rows(a) -> list[list[int]]:
    if isinstance(a, IntMatrix):
        return a.tolist()
    return [list(r) for r in a]


def det_exact(a) -> int:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting.

    Accepts an ``IntMatrix`` or a list of integer rows.  Every division is
    exact, so the result is exact for arbitrarily large entries.
    """
    m = _rows(a)
    n = len(m)
    if any(len(r) != n for r in m):
        raise PreconditionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k]
        akk = pk[k]
        tail = pk[k + 1:]
        for i in range(k + 1, n):
            ri = m[i]
            aik = ri[k]
            if aik == 0:
                if akk == prev:
                    continue
                ri[k + 1:] = [x * akk // prev for x in ri[k + 1:]]
            else:
                ri[k + 1:] = [(x * akk - aik * y) // prev for x, y in zip(ri[k + 1:], tail)]
        prev = akk
    return sign * m[n - 1][n - 1]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise PreconditionError(f"shape mismatch: {a.shape} @ {b.shape}")
    bt = list(zip(*b.entries))
    return IntMatrix([[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a.entries])


def sandwich_product(a: IntMatrix, e: IntMatrix, b: IntMatrix) -> IntMatrix:
    """``a • b = a·e·b`` on the sandwich element ``e``."""
    if not (a.is_square() and e.shape == a.shape and b.shape == a.shape):
        raise PreconditionError(f"sandwich needs equal square shapes, got {a.shape}, {e.shape}, {b.shape}")
    return a @ e @ b


def mat_pow(m: IntMatrix, n: int) -> IntMatrix:
    if not m.is_square():
        raise PreconditionError("power of a non-square matrix")
    if n < 0:
        raise PreconditionError("negative exponent")
    result = IntMatrix.identity(m.rows)
    base = m
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def sandwich_power(a: IntMatrix, e: IntMatrix, n: int) -> IntMatrix:
    """``a • a • ... • a`` with ``n+1`` factors, i.e. ``a·(e·a)^n``, in O(log n) products."""
    if not (a.is_square() and e.shape == a.shape):
        raise PreconditionError(f"sandwich power needs equal square shapes, got {a.shape}, {e.shape}")
    if n < 0:
        raise PreconditionError("negative sandwich exponent")
    return a @ mat_pow(e @ a, n)
