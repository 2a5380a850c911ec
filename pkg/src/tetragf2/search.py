"""Exhaustive searches over GL(3, GF(2)) and the persisted solution store."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from . import _kernels
from .gf2 import (
    GF2Mat3,
    all_matrices3,
    check_ds_tetra,
    check_modified_pair,
    embed,
    enumerate_gl3,
    extract_embedded,
    invert6,
    is_genuinely_3d,
    is_invertible3,
    mul6,
    SLOT_123,
    SLOT_145,
    SLOT_246,
    SLOT_356,
)

STORE_MAGIC = "TETRA-DS-V1"

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def fnv1a64(lines: Iterable[bytes]) -> int:
    """64-bit FNV-1a over the given byte strings, in order."""
    h = _FNV_OFFSET
    for line in lines:
        for byte in line:
            h = ((h ^ byte) * _FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


class StoreFormatError(ValueError):
    """Malformed store file; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SolutionRecord(NamedTuple):
    r1: GF2Mat3
    r2: GF2Mat3
    r3: GF2Mat3
    r4: GF2Mat3

    def to_line(self) -> str:
        return " ".join(m.to_text() for m in self)

    @classmethod
    def from_line(cls, line: str) -> "SolutionRecord":
        parts = line.split(" ")
        if len(parts) != 4:
            raise ValueError(f"expected 4 matrices, got {len(parts)}")
        return cls(*(GF2Mat3.parse(p) for p in parts))


class SixTuple(NamedTuple):
    r1: GF2Mat3
    r2: GF2Mat3
    r3: GF2Mat3
    r4: GF2Mat3
    s3: GF2Mat3
    s4: GF2Mat3


class ModifiedPair(NamedTuple):
    """Unordered pair of fourth factors swapping sides of the relation;
    canonical orientation has the smaller packing first."""

    r1: GF2Mat3
    r2: GF2Mat3
    r3: GF2Mat3
    r4: GF2Mat3
    q4: GF2Mat3


@dataclass(frozen=True)
class SolutionStore:
    """Base solutions in canonical order, indexed by (r1, r2) for
    six-tuple counting."""

    records: tuple[SolutionRecord, ...]
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        index: dict[tuple[int, int], dict[int, set[int]]] = {}
        for rec in self.records:
            group = index.setdefault((rec.r1.bits, rec.r2.bits), {})
            group.setdefault(rec.r3.bits, set()).add(rec.r4.bits)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.records)

    def __contains__(self, rec: SolutionRecord) -> bool:
        group = self._index.get((rec.r1.bits, rec.r2.bits))
        return group is not None and rec.r4.bits in group.get(rec.r3.bits, ())

    def groups(self) -> dict[tuple[int, int], dict[int, set[int]]]:
        return self._index


def set_threads(threads: int | None) -> None:
    """Pin the numba thread count; results are independent of it."""
    if threads is not None:
        import numba

        numba.set_num_threads(max(1, threads))


def search_base(
    restrict_invertible: bool = True,
    threads: int | None = None,
    allow_unrestricted: bool = False,
) -> SolutionStore:
    """All ordered quadruples solving the direct-sum relation.

    Two-pass kernel: solution counts per first factor, then a fill into
    preallocated slices, so the output order (lexicographic by packed
    quadruple) does not depend on the worker count.
    """
    if not restrict_invertible and not allow_unrestricted:
        raise ValueError(
            "unrestricted search covers 512^4 quadruples; pass allow_unrestricted=True"
        )
    set_threads(threads)
    candidates = list(enumerate_gl3()) if restrict_invertible else list(all_matrices3())
    tables = _kernels.embedding_tables(candidates)
    counts = _kernels.base_search_counts(*tables)
    offsets = np.zeros(len(candidates) + 1, np.int64)
    np.cumsum(counts, out=offsets[1:])
    out = np.zeros((int(offsets[-1]), 4), np.int16)
    _kernels.base_search_fill(*tables, offsets, out)
    records = tuple(
        SolutionRecord(candidates[a], candidates[b], candidates[c], candidates[d])
        for a, b, c, d in out.tolist()
    )
    return SolutionStore(records)


@dataclass(frozen=True)
class SixTupleResult:
    """Raw ordered and interchange-deduplicated six-tuple counts, plus a
    canonical-order stream of the tuples themselves."""

    store: SolutionStore
    raw_count: int
    dedup_count: int

    def __iter__(self) -> Iterator[SixTuple]:
        return iter_sixtuples(self.store)


def search_sixtuples(store: SolutionStore) -> SixTupleResult:
    """Count ordered six-tuples (r1, r2, r3, r4, s3, s4) where all four
    (r3|s3, r4|s4) combinations are base solutions, s3 != r3, s4 != r4.

    Raw semantics count both interchange partners; the deduplicated count
    quotients by the r3<->s3 and r4<->s4 interchanges (each orbit has
    size 4 since the tuples are off-diagonal in both coordinates).
    """
    raw = 0
    dedup = 0
    for group in store.groups().values():
        r3list = sorted(group)
        for ia, a in enumerate(r3list):
            for b in r3list[ia + 1 :]:
                t = len(group[a] & group[b])
                dedup += t * (t - 1) // 2
                raw += 2 * t * (t - 1)
    return SixTupleResult(store, raw, dedup)


def iter_sixtuples(store: SolutionStore) -> Iterator[SixTuple]:
    """Stream six-tuples in lexicographic order of packed
    (r1, r2, r3, r4, s3, s4)."""
    for (b1, b2), group in sorted(store.groups().items()):
        r1, r2 = GF2Mat3(b1), GF2Mat3(b2)
        r3list = sorted(group)
        for b3 in r3list:
            p3 = group[b3]
            for b4 in sorted(p3):
                for bs3 in r3list:
                    if bs3 == b3 or b4 not in group[bs3]:
                        continue
                    common = p3 & group[bs3]
                    for bs4 in sorted(common):
                        if bs4 == b4:
                            continue
                        yield SixTuple(
                            r1, r2, GF2Mat3(b3), GF2Mat3(b4), GF2Mat3(bs3), GF2Mat3(bs4)
                        )


def filter_nontrivial(t: SixTuple) -> bool:
    """At least one of the four interchangeable factors interlinks all
    three dimensions."""
    return any(is_genuinely_3d(m) for m in (t.r3, t.s3, t.r4, t.s4))


def search_modified_pairs(
    r1: GF2Mat3, r2: GF2Mat3, r3: GF2Mat3, restrict_invertible: bool = True
) -> list[ModifiedPair]:
    """All unordered pairs {r4, q4} of distinct fourth factors satisfying
    both modified relations with the given triple.

    For each candidate r4, the first relation determines the counterpart
    embedding uniquely as A . X . B^-1; it is accepted only if it has
    exact embedding shape at the fourth slot with an admissible core, and
    the swapped relation is then verified explicitly.
    """
    for m in (r1, r2, r3):
        if not is_invertible3(m):
            raise ValueError(f"triple must be invertible, got {m.to_text()}")
    m1 = embed(r1, SLOT_123)
    m2 = embed(r2, SLOT_145)
    m3 = embed(r3, SLOT_246)
    a = mul6(mul6(m1, m2), m3)
    b = mul6(mul6(m3, m2), m1)
    b_inv = invert6(b)
    candidates = enumerate_gl3() if restrict_invertible else tuple(all_matrices3())
    pairs: set[tuple[int, int]] = set()
    for r4 in candidates:
        x = embed(r4, SLOT_356)
        q = mul6(mul6(a, x), b_inv)
        q4 = extract_embedded(q, SLOT_356)
        if q4 is None or q4 == r4:
            continue
        if restrict_invertible and not is_invertible3(q4):
            continue
        if mul6(a, embed(q4, SLOT_356)) != mul6(x, b):
            continue
        pairs.add((min(r4.bits, q4.bits), max(r4.bits, q4.bits)))
    return [
        ModifiedPair(r1, r2, r3, GF2Mat3(lo), GF2Mat3(hi)) for lo, hi in sorted(pairs)
    ]


def search_all_modified(
    triple_range: tuple[int, int] | None = None,
    chunk_cap: int = 1 << 20,
) -> Iterator[tuple[tuple[GF2Mat3, GF2Mat3, GF2Mat3], list[ModifiedPair]]]:
    """Scan GL(3, GF(2))^3 triples (optionally a sub-range of first-factor
    indices) and yield each triple admitting at least one modified pair,
    with its pairs, in canonical order."""
    gl = list(enumerate_gl3())
    lo, hi = triple_range if triple_range is not None else (0, len(gl))
    if not (0 <= lo <= hi <= len(gl)):
        raise ValueError(f"triple range must lie within 0..{len(gl)}")
    tables = _kernels.embedding_tables(gl)
    cand_bits = np.array([m.bits for m in gl], np.int16)
    in_cand = np.zeros(512, np.bool_)
    in_cand[cand_bits] = True
    for i1 in range(lo, hi):
        cap = chunk_cap
        while True:
            rows, overflow = _kernels.modified_scan(
                *tables, cand_bits, in_cand, i1, i1 + 1, cap
            )
            if not overflow:
                break
            cap *= 2
        by_triple: dict[tuple[int, int, int], list[ModifiedPair]] = {}
        for a, b, c, q4, r4 in rows.tolist():
            triple = (a, b, c)
            by_triple.setdefault(triple, []).append(
                ModifiedPair(gl[a], gl[b], gl[c], GF2Mat3(q4), GF2Mat3(r4))
            )
        for (a, b, c), pairs in sorted(by_triple.items()):
            yield (gl[a], gl[b], gl[c]), sorted(pairs, key=lambda p: (p.r4.bits, p.q4.bits))


def pair_count_histogram(
    triple_range: tuple[int, int] | None = None,
) -> dict[int, int]:
    """Multiplicity distribution of modified-pair counts per triple, over
    triples admitting at least one pair."""
    hist: dict[int, int] = {}
    for _, pairs in search_all_modified(triple_range):
        hist[len(pairs)] = hist.get(len(pairs), 0) + 1
    return dict(sorted(hist.items()))


def save_store(store: SolutionStore, path: str | os.PathLike) -> None:
    record_lines = [rec.to_line() + "\n" for rec in store.records]
    checksum = fnv1a64(line.encode("ascii") for line in record_lines)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(f"{STORE_MAGIC} count={len(store.records)} field=F2 group=GL3\n")
        fh.writelines(record_lines)
        fh.write(f"END {checksum:016x}\n")


def load_store(path: str | os.PathLike) -> SolutionStore:
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise StoreFormatError("empty file", 1)
    header = lines[0].split(" ")
    if len(header) != 4 or header[0] != STORE_MAGIC:
        raise StoreFormatError(f"bad magic, expected {STORE_MAGIC!r}", 1)
    try:
        count = int(header[1].removeprefix("count="))
    except ValueError:
        raise StoreFormatError(f"bad count field {header[1]!r}", 1) from None
    if header[2] != "field=F2" or header[3] != "group=GL3":
        raise StoreFormatError("unsupported field/group", 1)
    if len(lines) != count + 2:
        raise StoreFormatError(
            f"expected {count} records plus END, found {len(lines) - 1} lines after header",
            len(lines),
        )
    records = []
    for i, line in enumerate(lines[1 : 1 + count], start=2):
        try:
            records.append(SolutionRecord.from_line(line))
        except ValueError as exc:
            raise StoreFormatError(str(exc), i) from None
    trailer = lines[1 + count]
    checksum = fnv1a64((line + "\n").encode("ascii") for line in lines[1 : 1 + count])
    if trailer != f"END {checksum:016x}":
        raise StoreFormatError(
            f"bad trailer or checksum, expected 'END {checksum:016x}'", count + 2
        )
    return SolutionStore(tuple(records))


def verify_record(rec: SolutionRecord) -> bool:
    """Re-check a record against the unpacked relation test."""
    return check_ds_tetra(*rec)


def verify_sixtuple(t: SixTuple) -> bool:
    """All four slot combinations of a six-tuple solve the base relation."""
    return (
        check_ds_tetra(t.r1, t.r2, t.r3, t.r4)
        and check_ds_tetra(t.r1, t.r2, t.r3, t.s4)
        and check_ds_tetra(t.r1, t.r2, t.s3, t.r4)
        and check_ds_tetra(t.r1, t.r2, t.s3, t.s4)
        and t.s3 != t.r3
        and t.s4 != t.r4
    )


def verify_modified_pair(p: ModifiedPair) -> bool:
    """Both modified relations hold, in both orientations."""
    return p.r4 != p.q4 and check_modified_pair(p.r1, p.r2, p.r3, p.r4, p.q4)
