"""Dense linear algebra over GF(2) with rows packed into Python ints.

Bit ``j`` of a row int is the entry in column ``j``.  Elimination works on
whole rows at once (``^`` on ints), which is word-level XOR under the hood.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def bits_to_int(bits: Sequence[int]) -> int:
    value = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"entry {b!r} at position {j} is not a bit")
        if b:
            value |= 1 << j
    return value


def int_to_bits(value: int, length: int) -> list[int]:
    return [(value >> j) & 1 for j in range(length)]


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} packed rows, got {len(self.data)}")
        limit = 1 << self.cols
        for i, r in enumerate(self.data):
            if r < 0 or r >= limit:
                raise ValueError(f"row {i} has bits outside {self.cols} columns")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> BitMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count is required for an empty row list")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(bits_to_int(r) for r in rows))

    @classmethod
    def from_strings(cls, *rows: str) -> BitMatrix:
        """``BitMatrix.from_strings("110", "011")``; leftmost char is column 0."""
        return cls.from_rows([[int(c) for c in r] for r in rows])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    def _check(self, i: int, j: int) -> None:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        self._check(i, j)
        return (self.data[i] >> j) & 1

    def with_entry(self, i: int, j: int, bit: int) -> BitMatrix:
        self._check(i, j)
        data = list(self.data)
        data[i] = (data[i] & ~(1 << j)) | ((bit & 1) << j)
        return BitMatrix(self.rows, self.cols, tuple(data))

    def to_lists(self) -> list[list[int]]:
        return [int_to_bits(r, self.cols) for r in self.data]

    def transpose(self) -> BitMatrix:
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(self.cols, self.rows, tuple(out))

    def matvec(self, x: int) -> int:
        """Product with a packed column vector; returns a packed vector of length ``rows``."""
        out = 0
        for i, r in enumerate(self.data):
            if bin(r & x).count("1") & 1:
                out |= 1 << i
        return out

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for r in self.data:
            acc = 0
            while r:
                low = r & -r
                acc ^= other.data[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return BitMatrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.data)


def _echelon(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns).

    Pivots are taken left to right, each from the first remaining row that
    has the column set.
    """
    pivots = []
    top = 0
    n = len(rows)
    for col in range(ncols):
        if top == n:
            break
        bit = 1 << col
        for p in range(top, n):
            if rows[p] & bit:
                break
        else:
            continue
        rows[top], rows[p] = rows[p], rows[top]
        piv = rows[top]
        for r in range(n):
            if r != top and rows[r] & bit:
                rows[r] ^= piv
        pivots.append(col)
        top += 1
    return rows, pivots


def rank(m: BitMatrix) -> int:
    _, pivots = _echelon(list(m.data), m.cols)
    return len(pivots)


def kernel_dim(m: BitMatrix) -> int:
    return m.cols - rank(m)


def kernel_basis(m: BitMatrix) -> list[int]:
    """Packed basis vectors of the right null space."""
    rows, pivots = _echelon(list(m.data), m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for r, col in zip(rows, pivots):
            if (r >> free) & 1:
                v |= 1 << col
        basis.append(v)
    return basis


def solve_packed(m: BitMatrix, b: int) -> int | None:
    """Packed-vector form of :func:`solve`."""
    aug_bit = 1 << m.cols
    rows = [r | (aug_bit if (b >> i) & 1 else 0) for i, r in enumerate(m.data)]
    rows, pivots = _echelon(rows, m.cols)
    for r in rows[len(pivots):]:
        if r:
            # only the augmented bit can survive below the pivots
            return None
    x = 0
    for r, col in zip(rows, pivots):
        if r & aug_bit:
            x |= 1 << col
    return x


def solve(m: BitMatrix, b: Sequence[int]) -> list[int] | None:
    """Some ``x`` with ``m @ x == b`` over GF(2), or ``None`` if inconsistent.

    Free variables are set to zero.
    """
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {m.rows} rows")
    x = solve_packed(m, bits_to_int(b))
    return None if x is None else int_to_bits(x, m.cols)
