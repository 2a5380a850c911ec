"""Exact 3x3 and 6x6 matrix algebra over GF(2).

Matrices are bit-packed into a single integer, row-major with entry (1,1)
in the most significant bit.  With this layout the integer order of the
packing coincides with lexicographic order on the entry sequence
(r11, r12, r13, r21, ...), which gives deterministic enumeration and
stable cache files.

Vectors are rows and matrices act from the right: x . (a b) = (x . a) . b.
All products in this package read left to right in application order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


class SingularMatrixError(ValueError):
    """Raised when a matrix over GF(2) has no inverse."""


# Canonical slots of the six-fold space: each 3x3 factor occupies the
# intersection of three rows/columns of a 6x6 identity matrix.
SLOT_123 = (1, 2, 3)
SLOT_145 = (1, 4, 5)
SLOT_246 = (2, 4, 6)
SLOT_356 = (3, 5, 6)
CANONICAL_SLOTS = (SLOT_123, SLOT_145, SLOT_246, SLOT_356)

Slot = tuple[int, int, int]


def _check_slot(slot: Slot) -> None:
    i, j, k = slot
    if not (1 <= i < j < k <= 6):
        raise ValueError(f"slot must be strictly increasing within 1..6, got {slot}")


@dataclass(frozen=True, order=True)
class GF2Mat3:
    """A 3x3 matrix over GF(2), packed into 9 bits."""

    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < 512:
            raise ValueError(f"bits out of range for a 3x3 GF(2) matrix: {self.bits}")

    @classmethod
    def from_rows(cls, rows) -> "GF2Mat3":
        bits = 0
        for p in range(3):
            for q in range(3):
                if rows[p][q] not in (0, 1):
                    raise ValueError("entries must be 0 or 1")
                bits = (bits << 1) | rows[p][q]
        return cls(bits)

    @classmethod
    def parse(cls, text: str) -> "GF2Mat3":
        """Parse the 'rrr/rrr/rrr' text format, e.g. '011/001/110'."""
        parts = text.split("/")
        if len(parts) != 3 or any(len(p) != 3 for p in parts):
            raise ValueError(f"expected three '/'-separated rows of three digits: {text!r}")
        digits = "".join(parts)
        if any(c not in "01" for c in digits):
            raise ValueError(f"matrix entries must be 0 or 1: {text!r}")
        return cls(int(digits, 2))

    def to_text(self) -> str:
        s = format(self.bits, "09b")
        return f"{s[0:3]}/{s[3:6]}/{s[6:9]}"

    def __str__(self) -> str:
        return self.to_text()

    def entry(self, p: int, q: int) -> int:
        """Entry at row p, column q (1-based)."""
        return (self.bits >> (8 - (3 * (p - 1) + (q - 1)))) & 1

    def rows(self) -> list[list[int]]:
        return [[self.entry(p, q) for q in (1, 2, 3)] for p in (1, 2, 3)]

    def row_bits(self, p: int) -> int:
        """Row p packed into 3 bits, column 1 most significant."""
        return (self.bits >> (3 * (3 - p))) & 0b111

    def transpose(self) -> "GF2Mat3":
        r = self.rows()
        return GF2Mat3.from_rows([[r[q][p] for q in range(3)] for p in range(3)])


IDENTITY3 = GF2Mat3(0b100_010_001)


def mul3(a: GF2Mat3, b: GF2Mat3) -> GF2Mat3:
    """Matrix product over GF(2); x . (a b) = (x . a) . b."""
    bits = 0
    for p in (1, 2, 3):
        row = 0
        ar = a.row_bits(p)
        for j in range(3):
            if (ar >> (2 - j)) & 1:
                row ^= b.row_bits(j + 1)
        bits = (bits << 3) | row
    return GF2Mat3(bits)


def is_invertible3(a: GF2Mat3) -> bool:
    rows = [a.row_bits(p) for p in (1, 2, 3)]
    rank = 0
    for col_bit in (4, 2, 1):
        pivot = next((i for i in range(rank, 3) if rows[i] & col_bit), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(3):
            if i != rank and rows[i] & col_bit:
                rows[i] ^= rows[rank]
        rank += 1
    return rank == 3


def invert3(a: GF2Mat3) -> GF2Mat3:
    """Inverse over GF(2); raises SingularMatrixError if none exists."""
    rows = [a.row_bits(p) for p in (1, 2, 3)]
    aug = [1 << (2 - i) for i in range(3)]
    rank = 0
    for j, col_bit in enumerate((4, 2, 1)):
        pivot = next((i for i in range(rank, 3) if rows[i] & col_bit), None)
        if pivot is None:
            raise SingularMatrixError(f"matrix {a.to_text()} is singular over GF(2)")
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        for i in range(3):
            if i != rank and rows[i] & col_bit:
                rows[i] ^= rows[rank]
                aug[i] ^= aug[rank]
        rank += 1
    return GF2Mat3((aug[0] << 6) | (aug[1] << 3) | aug[2])


@lru_cache(maxsize=1)
def enumerate_gl3() -> tuple[GF2Mat3, ...]:
    """All 168 invertible 3x3 matrices over GF(2), ascending by packing."""
    return tuple(m for m in (GF2Mat3(b) for b in range(512)) if is_invertible3(m))


@dataclass(frozen=True, order=True)
class GF2Mat6:
    """A 6x6 matrix over GF(2), packed into 36 bits."""

    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < (1 << 36):
            raise ValueError(f"bits out of range for a 6x6 GF(2) matrix: {self.bits}")

    @classmethod
    def from_rows(cls, rows) -> "GF2Mat6":
        bits = 0
        for p in range(6):
            for q in range(6):
                if rows[p][q] not in (0, 1):
                    raise ValueError("entries must be 0 or 1")
                bits = (bits << 1) | rows[p][q]
        return cls(bits)

    def entry(self, p: int, q: int) -> int:
        return (self.bits >> (35 - (6 * (p - 1) + (q - 1)))) & 1

    def rows(self) -> list[list[int]]:
        return [[self.entry(p, q) for q in range(1, 7)] for p in range(1, 7)]

    def row_bits(self, p: int) -> int:
        """Row p packed into 6 bits, column 1 most significant."""
        return (self.bits >> (6 * (6 - p))) & 0b111111

    def transpose(self) -> "GF2Mat6":
        r = self.rows()
        return GF2Mat6.from_rows([[r[q][p] for q in range(6)] for p in range(6)])


IDENTITY6 = GF2Mat6.from_rows([[1 if p == q else 0 for q in range(6)] for p in range(6)])


def mul6(a: GF2Mat6, b: GF2Mat6) -> GF2Mat6:
    """Matrix product over GF(2); packed rows combined by XOR."""
    brows = [b.row_bits(p) for p in range(1, 7)]
    bits = 0
    for p in range(1, 7):
        row = 0
        ar = a.row_bits(p)
        for j in range(6):
            if (ar >> (5 - j)) & 1:
                row ^= brows[j]
        bits = (bits << 6) | row
    return GF2Mat6(bits)


def invert6(a: GF2Mat6) -> GF2Mat6:
    rows = [a.row_bits(p) for p in range(1, 7)]
    aug = [1 << (5 - i) for i in range(6)]
    rank = 0
    for j in range(6):
        col_bit = 1 << (5 - j)
        pivot = next((i for i in range(rank, 6) if rows[i] & col_bit), None)
        if pivot is None:
            raise SingularMatrixError("6x6 matrix is singular over GF(2)")
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        for i in range(6):
            if i != rank and rows[i] & col_bit:
                rows[i] ^= rows[rank]
                aug[i] ^= aug[rank]
        rank += 1
    bits = 0
    for r in aug:
        bits = (bits << 6) | r
    return GF2Mat6(bits)


def embed(r: GF2Mat3, slot: Slot) -> GF2Mat6:
    """Place r at rows/columns (i, j, k) of the 6x6 identity matrix."""
    _check_slot(slot)
    rows = [[1 if p == q else 0 for q in range(6)] for p in range(6)]
    idx = [s - 1 for s in slot]
    for p in range(3):
        for q in range(3):
            rows[idx[p]][idx[q]] = r.entry(p + 1, q + 1)
    return GF2Mat6.from_rows(rows)


def extract_embedded(m: GF2Mat6, slot: Slot) -> GF2Mat3 | None:
    """Inverse of embed: the 3x3 core at slot, or None if m is not an
    embedding there (any off-slot entry differing from the identity)."""
    _check_slot(slot)
    idx = set(s - 1 for s in slot)
    for p in range(6):
        for q in range(6):
            if p in idx and q in idx:
                continue
            if m.entry(p + 1, q + 1) != (1 if p == q else 0):
                return None
    i, j, k = (s - 1 for s in slot)
    rows = [[m.entry(p + 1, q + 1) for q in (i, j, k)] for p in (i, j, k)]
    return GF2Mat3.from_rows(rows)


def check_ds_tetra(r1: GF2Mat3, r2: GF2Mat3, r3: GF2Mat3, r4: GF2Mat3) -> bool:
    """Whether the direct-sum tetrahedron relation holds for the quadruple.

    Compares the 6x6 products over GF(2) of the four slot embeddings taken
    in application order against the same factors in reverse order.
    """
    m1 = embed(r1, SLOT_123)
    m2 = embed(r2, SLOT_145)
    m3 = embed(r3, SLOT_246)
    m4 = embed(r4, SLOT_356)
    lhs = mul6(mul6(mul6(m1, m2), m3), m4)
    rhs = mul6(mul6(mul6(m4, m3), m2), m1)
    return lhs == rhs


def check_modified_pair(
    r1: GF2Mat3, r2: GF2Mat3, r3: GF2Mat3, r4: GF2Mat3, q4: GF2Mat3
) -> bool:
    """Whether the modified pair of relations holds: the fourth factor on
    one side is r4 and on the other side q4, in both orientations."""
    m1 = embed(r1, SLOT_123)
    m2 = embed(r2, SLOT_145)
    m3 = embed(r3, SLOT_246)
    m4 = embed(r4, SLOT_356)
    mq = embed(q4, SLOT_356)
    pre = mul6(mul6(m1, m2), m3)
    post = mul6(mul6(m3, m2), m1)
    return mul6(pre, m4) == mul6(mq, post) and mul6(pre, mq) == mul6(m4, post)


def is_genuinely_3d(m: GF2Mat3) -> bool:
    """Whether the matrix interlinks all three dimensions.

    False iff some proper nonempty subset S of rows has no nonzero entry
    in columns outside S, i.e. the matrix is block triangular under a
    simultaneous row/column permutation.  Checking all six proper nonempty
    subsets subsumes every such permutation.
    """
    for s in range(1, 7):  # proper nonempty subsets of {0,1,2} as bit masks
        escapes = False
        for p in range(3):
            if not (s >> p) & 1:
                continue
            for q in range(3):
                if not (s >> q) & 1 and m.entry(p + 1, q + 1):
                    escapes = True
                    break
            if escapes:
                break
        if not escapes:
            return False
    return True


def all_matrices3() -> Iterator[GF2Mat3]:
    """All 512 matrices, ascending by packing."""
    return (GF2Mat3(b) for b in range(512))
