"""Numba kernels for the exhaustive searches.

6x6 matrices are held as arrays of six packed rows (uint8, column 1 in
bit 5).  The base search runs in two passes, counting per outer index
before filling, so results land in canonical order regardless of the
number of worker threads.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

from .gf2 import CANONICAL_SLOTS, GF2Mat3, embed


def embedding_table(matrices: list[GF2Mat3], slot) -> np.ndarray:
    """Packed rows of embed(m, slot) for every matrix, shape (n, 6)."""
    table = np.zeros((len(matrices), 6), dtype=np.uint8)
    for i, m in enumerate(matrices):
        e = embed(m, slot)
        for p in range(6):
            table[i, p] = e.row_bits(p + 1)
    return table


def embedding_tables(matrices: list[GF2Mat3]) -> tuple[np.ndarray, ...]:
    return tuple(embedding_table(matrices, s) for s in CANONICAL_SLOTS)


@njit(cache=True)
def _mul66(a, b, out):
    for i in range(6):
        r = 0
        ai = a[i]
        for j in range(6):
            if (ai >> (5 - j)) & 1:
                r ^= b[j]
        out[i] = r


@njit(cache=True)
def _base_row_scan(e123_i1, E145, E246, E356, hits, record):
    """Scan (i2, i3, i4) for one fixed first factor.

    Tests A . X = X . B row by row with early exit, where A and B are the
    forward and reversed products of the first three embedded factors and
    X ranges over the fourth-slot embeddings.  Returns the number of hits;
    when record is true, writes (i2, i3, i4) triples into hits.
    """
    n2 = E145.shape[0]
    n3 = E246.shape[0]
    n4 = E356.shape[0]
    t1 = np.zeros(6, np.uint8)
    A = np.zeros(6, np.uint8)
    B = np.zeros(6, np.uint8)
    cnt = 0
    for i2 in range(n2):
        _mul66(e123_i1, E145[i2], t1)
        for i3 in range(n3):
            _mul66(t1, E246[i3], A)
            _mul66(E246[i3], E145[i2], B)
            _mul66(B, e123_i1, B)
            for i4 in range(n4):
                x = E356[i4]
                ok = True
                for i in range(6):
                    ra = 0
                    rb = 0
                    ai = A[i]
                    xi = x[i]
                    for j in range(6):
                        if (ai >> (5 - j)) & 1:
                            ra ^= x[j]
                        if (xi >> (5 - j)) & 1:
                            rb ^= B[j]
                    if ra != rb:
                        ok = False
                        break
                if ok:
                    if record:
                        hits[cnt, 0] = i2
                        hits[cnt, 1] = i3
                        hits[cnt, 2] = i4
                    cnt += 1
    return cnt


@njit(cache=True, parallel=True)
def base_search_counts(E123, E145, E246, E356):
    n1 = E123.shape[0]
    counts = np.zeros(n1, np.int64)
    dummy = np.zeros((1, 3), np.int16)
    for i1 in prange(n1):
        counts[i1] = _base_row_scan(E123[i1], E145, E246, E356, dummy, False)
    return counts


@njit(cache=True, parallel=True)
def base_search_fill(E123, E145, E246, E356, offsets, out):
    n1 = E123.shape[0]
    for i1 in prange(n1):
        lo = offsets[i1]
        hi = offsets[i1 + 1]
        hits = np.zeros((hi - lo, 3), np.int16)
        _base_row_scan(E123[i1], E145, E246, E356, hits, True)
        for k in range(hi - lo):
            out[lo + k, 0] = i1
            out[lo + k, 1] = hits[k, 0]
            out[lo + k, 2] = hits[k, 1]
            out[lo + k, 3] = hits[k, 2]


@njit(cache=True)
def _inv66(a, out):
    """Gauss-Jordan inverse of packed rows; returns False if singular."""
    rows = np.zeros(6, np.uint8)
    aug = np.zeros(6, np.uint8)
    for i in range(6):
        rows[i] = a[i]
        aug[i] = 1 << (5 - i)
    rank = 0
    for j in range(6):
        col = 1 << (5 - j)
        piv = -1
        for i in range(rank, 6):
            if rows[i] & col:
                piv = i
                break
        if piv < 0:
            return False
        rows[rank], rows[piv] = rows[piv], rows[rank]
        aug[rank], aug[piv] = aug[piv], aug[rank]
        for i in range(6):
            if i != rank and rows[i] & col:
                rows[i] ^= rows[rank]
                aug[i] ^= aug[rank]
        rank += 1
    for i in range(6):
        out[i] = aug[i]
    return True


# The fourth slot occupies rows/columns 3, 5, 6 (0-indexed 2, 4, 5); an
# embedding there must vanish on columns 1, 2, 4 of the slot rows.
_OFF_SLOT_COLMASK = np.uint8((1 << 5) | (1 << 4) | (1 << 2))


@njit(cache=True)
def _extract_core_356(q):
    """9-bit core of an embedding-shaped matrix at the fourth slot, or -1."""
    for r in (0, 1, 3):
        if q[r] != (1 << (5 - r)):
            return -1
    bits = 0
    for r in (2, 4, 5):
        row = q[r]
        if row & _OFF_SLOT_COLMASK:
            return -1
        bits = (bits << 3) | (((row >> 3) & 1) << 2) | (((row >> 1) & 1) << 1) | (row & 1)
    return bits


@njit(cache=True)
def _embed_core_356(bits, out):
    """Packed rows of the fourth-slot embedding of a 9-bit core."""
    out[0] = 1 << 5
    out[1] = 1 << 4
    out[3] = 1 << 2
    slot_rows = (2, 4, 5)
    for p in range(3):
        row3 = (bits >> (3 * (2 - p))) & 7
        out[slot_rows[p]] = (((row3 >> 2) & 1) << 3) | (((row3 >> 1) & 1) << 1) | (row3 & 1)


@njit(cache=True)
def modified_scan(E123, E145, E246, E356, cand_bits, in_candidates, t1_lo, t1_hi, cap):
    """Scan triples (i1, i2, i3) with i1 in [t1_lo, t1_hi) for modified
    pairs of relations sharing the triple.

    For each fourth-slot candidate X the unique counterpart embedding is
    A . X . B^-1 (A, B the forward/reversed triple products); it is kept
    when it has embedding shape with an admissible core distinct from the
    candidate and the swapped relation also holds.  Pairs are emitted once
    (smaller core packing first) into out as (i1, i2, i3, r4_bits,
    q4_bits); returns (count, overflowed).
    """
    n = E123.shape[0]
    n4 = E356.shape[0]
    t1 = np.zeros(6, np.uint8)
    A = np.zeros(6, np.uint8)
    B = np.zeros(6, np.uint8)
    Binv = np.zeros(6, np.uint8)
    AX = np.zeros(6, np.uint8)
    Q = np.zeros(6, np.uint8)
    Qe = np.zeros(6, np.uint8)
    AQ = np.zeros(6, np.uint8)
    XB = np.zeros(6, np.uint8)
    out = np.zeros((cap, 5), np.int16)
    cnt = 0
    overflow = False
    for i1 in range(t1_lo, t1_hi):
        for i2 in range(n):
            _mul66(E123[i1], E145[i2], t1)
            for i3 in range(n):
                _mul66(t1, E246[i3], A)
                _mul66(E246[i3], E145[i2], B)
                _mul66(B, E123[i1], B)
                if not _inv66(B, Binv):
                    continue
                for i4 in range(n4):
                    x = E356[i4]
                    _mul66(A, x, AX)
                    _mul66(AX, Binv, Q)
                    q4 = _extract_core_356(Q)
                    if q4 < 0:
                        continue
                    r4 = cand_bits[i4]
                    if q4 >= r4:  # emit each unordered pair once
                        continue
                    if not in_candidates[q4]:
                        continue
                    _embed_core_356(q4, Qe)
                    _mul66(A, Qe, AQ)
                    _mul66(x, B, XB)
                    same = True
                    for i in range(6):
                        if AQ[i] != XB[i]:
                            same = False
                            break
                    if not same:
                        continue
                    if cnt < cap:
                        out[cnt, 0] = i1
                        out[cnt, 1] = i2
                        out[cnt, 2] = i3
                        out[cnt, 3] = q4
                        out[cnt, 4] = r4
                        cnt += 1
                    else:
                        overflow = True
    return out[:cnt], overflow
