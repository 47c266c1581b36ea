"""Bit-packed linear algebra over GF(2).

Vectors and matrix rows are Python integers used as bitsets: column 1
lives at the least significant bit, so row ``r`` has entry ``j`` equal
to ``(r >> (j - 1)) & 1``.  Padding bits above the declared length are
always zero, which makes equality a plain integer comparison.

All indices are 1-based at the public boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "BitRow",
    "BitMatrix",
    "DimensionError",
    "MatrixFormatError",
    "gf2_dot",
    "transpose_mul",
    "leading_principal_minors",
    "principal_submatrix",
    "iter_support",
]


class DimensionError(ValueError):
    """Operands disagree on dimensions."""


class MatrixFormatError(ValueError):
    """Malformed matrix text."""


def _mask(width: int) -> int:
    return (1 << width) - 1


def iter_support(bits: int) -> Iterator[int]:
    """Yield the 1-based positions of the set bits of ``bits``, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length()
        bits ^= low


@dataclass(frozen=True)
class BitRow:
    """A GF(2) row vector of fixed length.

    Attributes:
        length: number of entries.
        bits: packed entries, entry j at bit j-1.
    """

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise DimensionError(f"negative length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set outside the declared length")

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "BitRow":
        """Pack an iterable of 0/1 entries, first entry at column 1."""
        bits = 0
        n = 0
        for v in values:
            if v not in (0, 1):
                raise ValueError(f"entries must be 0 or 1, got {v!r}")
            bits |= v << n
            n += 1
        return cls(n, bits)

    def bit(self, j: int) -> int:
        """Entry at 1-based column j."""
        if not 1 <= j <= self.length:
            raise IndexError(f"column {j} outside [1, {self.length}]")
        return (self.bits >> (j - 1)) & 1

    def weight(self) -> int:
        """Number of ones (an integer, not a GF(2) value)."""
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        """1-based columns holding a one."""
        return tuple(iter_support(self.bits))

    def values(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def __xor__(self, other: "BitRow") -> "BitRow":
        if self.length != other.length:
            raise DimensionError(
                f"length mismatch: {self.length} vs {other.length}"
            )
        return BitRow(self.length, self.bits ^ other.bits)


def gf2_dot(a: BitRow, b: BitRow) -> int:
    """GF(2) inner product of two rows of equal length."""
    if a.length != b.length:
        raise DimensionError(f"length mismatch: {a.length} vs {b.length}")
    return (a.bits & b.bits).bit_count() & 1


@dataclass(frozen=True)
class BitMatrix:
    """A square GF(2) matrix stored as one packed integer per row.

    ``row_bits[i - 1]`` is row i; bit j-1 of it is entry (i, j).  Rows
    carry no padding above column n, so two equal matrices compare equal
    as tuples of ints.
    """

    n: int
    row_bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DimensionError(f"negative size {self.n}")
        object.__setattr__(self, "row_bits", tuple(self.row_bits))
        if len(self.row_bits) != self.n:
            raise DimensionError(
                f"expected {self.n} rows, got {len(self.row_bits)}"
            )
        top = _mask(self.n)
        for r in self.row_bits:
            if r < 0 or r & ~top:
                raise ValueError("row bits set outside column range")

    @classmethod
    def zero(cls, n: int) -> "BitMatrix":
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        """Build from a square list-of-lists of 0/1 entries."""
        n = len(rows)
        packed = []
        for row in rows:
            entries = list(row)
            if len(entries) != n:
                raise DimensionError("matrix must be square")
            bits = 0
            for j, v in enumerate(entries):
                if v not in (0, 1):
                    raise ValueError(f"entries must be 0 or 1, got {v!r}")
                bits |= v << j
            packed.append(bits)
        return cls(n, tuple(packed))

    def bit(self, i: int, j: int) -> int:
        """Entry at 1-based (row, column)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"row {i} outside [1, {self.n}]")
        if not 1 <= j <= self.n:
            raise IndexError(f"column {j} outside [1, {self.n}]")
        return (self.row_bits[i - 1] >> (j - 1)) & 1

    def row(self, i: int) -> BitRow:
        if not 1 <= i <= self.n:
            raise IndexError(f"row {i} outside [1, {self.n}]")
        return BitRow(self.n, self.row_bits[i - 1])

    def column(self, j: int) -> BitRow:
        if not 1 <= j <= self.n:
            raise IndexError(f"column {j} outside [1, {self.n}]")
        jm = 1 << (j - 1)
        bits = 0
        for i, r in enumerate(self.row_bits):
            if r & jm:
                bits |= 1 << i
        return BitRow(self.n, bits)

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.n
        for i, r in enumerate(self.row_bits):
            for j in iter_support(r):
                cols[j - 1] |= 1 << i
        return BitMatrix(self.n, tuple(cols))

    def is_symmetric(self) -> bool:
        return self.row_bits == self.transpose().row_bits

    def is_upper_triangular(self) -> bool:
        for i, r in enumerate(self.row_bits):
            if r & _mask(i):
                return False
        return True

    def to_dense(self) -> list[list[int]]:
        return [
            [(r >> j) & 1 for j in range(self.n)] for r in self.row_bits
        ]

    def to_text(self) -> str:
        """Serialize to the shared matrix text format.

        Line 1 is n, then n lines of n characters from {0, 1}, row i on
        line i+1 with column 1 leftmost.
        """
        lines = [str(self.n)]
        for r in self.row_bits:
            lines.append(
                "".join("1" if (r >> j) & 1 else "0" for j in range(self.n))
            )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        """Parse the matrix text format; raises MatrixFormatError."""
        lines = text.splitlines()
        if not lines or not lines[0].strip():
            raise MatrixFormatError("line 1: expected the matrix size")
        try:
            n = int(lines[0].strip())
        except ValueError:
            raise MatrixFormatError(
                f"line 1: expected an integer size, got {lines[0]!r}"
            ) from None
        if n < 0:
            raise MatrixFormatError(f"line 1: negative size {n}")
        rows = []
        for i in range(n):
            ln = i + 2
            if i + 1 >= len(lines):
                raise MatrixFormatError(f"line {ln}: missing row {i + 1}")
            raw = lines[i + 1].strip()
            if len(raw) != n or any(c not in "01" for c in raw):
                raise MatrixFormatError(
                    f"line {ln}: expected {n} characters from {{0,1}}"
                )
            bits = 0
            for j, c in enumerate(raw):
                if c == "1":
                    bits |= 1 << j
            rows.append(bits)
        for extra in lines[n + 1 :]:
            if extra.strip():
                raise MatrixFormatError("unexpected content after the matrix")
        return cls(n, tuple(rows))


def transpose_mul(u: BitMatrix) -> BitMatrix:
    """Return the GF(2) product of the transpose of ``u`` with ``u``.

    Entry (i, j) of the result is the GF(2) dot product of columns i and
    j of ``u``; the result is symmetric by construction.
    """
    out = [0] * u.n
    for r in u.row_bits:
        for i in iter_support(r):
            out[i - 1] ^= r
    return BitMatrix(u.n, tuple(out))


def leading_principal_minors(a: BitMatrix) -> tuple[int, ...]:
    """GF(2) determinants of every leading principal block of ``a``.

    Entry k-1 of the result is the determinant of the top-left k x k
    block.  Computed in one sweep: rows enter an echelon basis that is
    kept restricted to the columns activated so far, and rows whose
    active part vanishes wait in a pending pool until a later column
    revives them.  The k-th minor is 1 exactly when the basis holds k
    pivots after row and column k have been absorbed.
    """
    n = a.n
    pivots: dict[int, int] = {}
    pending: list[int] = []
    minors = []
    for k in range(n):
        bit = 1 << k
        survivors: list[int] = []
        pivot_row = None
        for r in pending:
            if r & bit:
                if pivot_row is None:
                    pivot_row = r
                    pivots[k] = r
                else:
                    r ^= pivot_row
                    if r:
                        survivors.append(r)
            else:
                survivors.append(r)
        pending = survivors
        r = a.row_bits[k]
        active = _mask(k + 1)
        while r & active:
            c = (r & -r).bit_length() - 1
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            r ^= p
        else:
            if r:
                pending.append(r)
        minors.append(1 if len(pivots) == k + 1 else 0)
    return tuple(minors)


def principal_submatrix(m: BitMatrix, lo: int, hi: int) -> BitMatrix:
    """Rows and columns lo..hi of ``m`` (1-based, inclusive)."""
    if not 1 <= lo <= hi <= m.n:
        raise IndexError(f"range {lo}..{hi} outside [1, {m.n}]")
    span = hi - lo + 1
    window = _mask(span) << (lo - 1)
    rows = tuple(
        (m.row_bits[i] & window) >> (lo - 1) for i in range(lo - 1, hi)
    )
    return BitMatrix(span, rows)
