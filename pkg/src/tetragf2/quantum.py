"""Permutation-type quantization and exact quantum relation checks.

A GF(2) matrix acting on row vectors permutes the basis of the real span
of GF(2)^n; its quantization is that permutation.  State indices encode
tuples with coordinate 1 most significant (x -> 4*x1 + 2*x2 + x3 for
n = 3).  Matrix reading of a permutation p: entry [x, y] = 1 iff
y = p.map[x], so products read left to right in application order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .gf2 import (
    GF2Mat3,
    GF2Mat6,
    SLOT_123,
    SLOT_145,
    SLOT_246,
    SLOT_356,
    SingularMatrixError,
    Slot,
    _check_slot,
    is_invertible3,
)

Coefficient = Union[int, Fraction, str]

#: Substitution used for the numeric cross-check of weighted relations;
#: distinct primes so no two monomials can collide by accident.
NUMERIC_POINT = {"alpha": 1, "beta": 2, "lambda": 3, "mu": 5}


@dataclass(frozen=True)
class PermOp:
    """Permutation operator on 2^n basis states (n = 3 or 6)."""

    dim: int
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.dim not in (8, 64):
            raise ValueError(f"dim must be 8 or 64, got {self.dim}")
        if len(self.map) != self.dim or sorted(self.map) != list(range(self.dim)):
            raise ValueError("map must be a permutation of 0..dim-1")

    @classmethod
    def identity(cls, dim: int) -> "PermOp":
        return cls(dim, tuple(range(dim)))

    def inverse(self) -> "PermOp":
        inv = [0] * self.dim
        for x, y in enumerate(self.map):
            inv[y] = x
        return PermOp(self.dim, tuple(inv))

    def matrix(self) -> np.ndarray:
        """0/1 matrix, rows indexed by the input state."""
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        m[np.arange(self.dim), self.map] = 1
        return m

    def serialize(self) -> str:
        """Image indices, decimal, comma-separated."""
        return ",".join(str(y) for y in self.map)


def compose(a: PermOp, b: PermOp) -> PermOp:
    """Apply a first, then b (left-to-right product order)."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return PermOp(a.dim, tuple(b.map[y] for y in a.map))


def _apply3(r: GF2Mat3, x: int) -> int:
    """Image of the 3-bit state x under the right action of r."""
    y = 0
    for q in range(3):
        bit = 0
        for p in range(3):
            bit ^= ((x >> (2 - p)) & 1) & r.entry(p + 1, q + 1)
        y = (y << 1) | bit
    return y


def quantize(r: GF2Mat3) -> PermOp:
    """Permutation of the 8 basis states sending x to x . r."""
    if not is_invertible3(r):
        raise SingularMatrixError(
            f"cannot quantize singular matrix {r.to_text()}: the state map is not a bijection"
        )
    return PermOp(8, tuple(_apply3(r, x) for x in range(8)))


def quantize6(m: GF2Mat6) -> PermOp:
    """Permutation of the 64 basis states sending x to x . m."""
    images = []
    for x in range(64):
        y = 0
        for q in range(6):
            bit = 0
            for p in range(6):
                bit ^= ((x >> (5 - p)) & 1) & m.entry(p + 1, q + 1)
            y = (y << 1) | bit
        images.append(y)
    if sorted(images) != list(range(64)):
        raise SingularMatrixError("cannot quantize a singular 6x6 matrix")
    return PermOp(64, tuple(images))


def lift(p: PermOp, slot: Slot) -> PermOp:
    """Extend a dim-8 operator to 64 states: act on the sub-triple of bits
    at the slot positions, identity on the remaining three."""
    _check_slot(slot)
    if p.dim != 8:
        raise ValueError("lift expects a dim-8 operator")
    pos = [6 - s for s in slot]  # bit index per space, space 1 most significant
    images = []
    for x in range(64):
        sub = 0
        for b in pos:
            sub = (sub << 1) | ((x >> b) & 1)
        sub = p.map[sub]
        y = x
        for i, b in enumerate(pos):
            bit = (sub >> (2 - i)) & 1
            y = (y & ~(1 << b)) | (bit << b)
        images.append(y)
    return PermOp(64, tuple(images))


def _chain(q1: PermOp, q2: PermOp, q3: PermOp, q4: PermOp) -> PermOp:
    return compose(
        compose(compose(lift(q1, SLOT_123), lift(q2, SLOT_145)), lift(q3, SLOT_246)),
        lift(q4, SLOT_356),
    )


def _chain_rev(q4: PermOp, q3: PermOp, q2: PermOp, q1: PermOp) -> PermOp:
    return compose(
        compose(compose(lift(q4, SLOT_356), lift(q3, SLOT_246)), lift(q2, SLOT_145)),
        lift(q1, SLOT_123),
    )


def check_quantum_pure(
    q1: PermOp, q2: PermOp, q3: PermOp, q4_left: PermOp, q4_right: PermOp
) -> bool:
    """Whether q1 q2 q3 q4_left equals q4_right q3 q2 q1 after lifting to
    64 states.  Equal fourth factors give the plain quantum tetrahedron
    relation; distinct ones give the two modified relations."""
    return _chain(q1, q2, q3, q4_left) == _chain_rev(q4_right, q3, q2, q1)


@dataclass(frozen=True)
class WeightedOp:
    """Integer- or parameter-weighted combination of permutation operators.

    Coefficients are exact rationals or formal symbols drawn from
    {'alpha', 'beta', 'lambda', 'mu'}.
    """

    dim: int
    terms: tuple[tuple[Coefficient, PermOp], ...]

    def __post_init__(self) -> None:
        for c, p in self.terms:
            if p.dim != self.dim:
                raise ValueError("term dimension mismatch")
            if isinstance(c, str) and c not in NUMERIC_POINT:
                raise ValueError(f"unknown parameter symbol {c!r}")

    def matrix(self, subs: dict[str, Union[int, Fraction]] | None = None) -> np.ndarray:
        """Numeric matrix after substituting symbols (default: the fixed
        prime point used for cross-checks)."""
        subs = NUMERIC_POINT if subs is None else subs
        # object dtype keeps Fraction coefficients exact
        m = np.zeros((self.dim, self.dim), dtype=object)
        for c, p in self.terms:
            v = subs[c] if isinstance(c, str) else c
            m[np.arange(self.dim), p.map] += v
        return m

    def serialize(self) -> str:
        return "; ".join(f"{c}*[{p.serialize()}]" for c, p in self.terms)


def _coeff_key(c: Coefficient) -> tuple[str | None, Union[int, Fraction]]:
    """Split a coefficient into (symbol, numeric factor)."""
    if isinstance(c, str):
        return c, 1
    return None, c


def _side_polynomial(q1: PermOp, q2: PermOp, w3: WeightedOp, w4: WeightedOp, reversed_side: bool):
    """Matrix-valued polynomial of one side, keyed by monomial in the
    formal parameters."""
    poly: dict[tuple[str | None, str | None], np.ndarray] = {}
    for c3, p3 in w3.terms:
        for c4, p4 in w4.terms:
            s3, n3 = _coeff_key(c3)
            s4, n4 = _coeff_key(c4)
            perm = _chain_rev(p4, p3, q2, q1) if reversed_side else _chain(q1, q2, p3, p4)
            mat = poly.setdefault((s3, s4), np.zeros((64, 64), dtype=object))
            mat[np.arange(64), perm.map] += n3 * n4
    return poly


def check_quantum_weighted(q1: PermOp, q2: PermOp, w3: WeightedOp, w4: WeightedOp) -> bool:
    """Whether q1 q2 w3 w4 = w4 w3 q2 q1 holds identically in the formal
    parameters, as 64x64 matrices.

    Both sides are bilinear in the term coefficients, so expanding into
    per-monomial permutation sums and comparing those exactly is complete.
    A numeric evaluation at the fixed prime point double-checks the
    expansion.
    """
    lhs = _side_polynomial(q1, q2, w3, w4, reversed_side=False)
    rhs = _side_polynomial(q1, q2, w3, w4, reversed_side=True)
    if set(lhs) != set(rhs):
        return False
    if not all(np.array_equal(lhs[k], rhs[k]) for k in lhs):
        return False

    m1 = lift_matrix(q1, SLOT_123)
    m2 = lift_matrix(q2, SLOT_145)
    m3 = weighted_lift_matrix(w3, SLOT_246)
    m4 = weighted_lift_matrix(w4, SLOT_356)
    left = m1 @ m2 @ m3 @ m4
    right = m4 @ m3 @ m2 @ m1
    return bool(np.array_equal(left, right))


def lift_matrix(p: PermOp, slot: Slot) -> np.ndarray:
    return lift(p, slot).matrix()


def weighted_lift_matrix(w: WeightedOp, slot: Slot) -> np.ndarray:
    """Numeric 64x64 matrix of a lifted dim-8 weighted operator at the
    fixed prime point."""
    m = np.zeros((64, 64), dtype=object)
    for c, p in w.terms:
        v = NUMERIC_POINT[c] if isinstance(c, str) else c
        lp = lift(p, slot)
        m[np.arange(64), lp.map] += v
    return m


def vertex_count(w: WeightedOp) -> int:
    """Number of nonzero matrix entries for generic coefficients."""
    if not 1 <= len(w.terms) <= 2:
        raise ValueError("vertex_count expects 1 or 2 permutation terms")
    positions = set()
    for _, p in w.terms:
        positions.update(enumerate(p.map))
    return len(positions)


def entries_of_T(r4: GF2Mat3, q4: GF2Mat3) -> Counter:
    """Multiset of entries of quantize(r4) + quantize(q4).

    Entries are 0, 1 or 2; a 2 occurs exactly where the two permutations
    agree.
    """
    m = quantize(r4).matrix() + quantize(q4).matrix()
    return Counter(int(v) for v in m.ravel())
