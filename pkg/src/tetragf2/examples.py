"""Worked examples 1-8: known solution families used by verify-example.

Examples 1-4 are six-tuples whose two-term combinations give 12- or
14-vertex quantum matrices; examples 5-8 are triples with one, two, two
and four modified pairs respectively.
"""

from __future__ import annotations

from typing import NamedTuple

from .gf2 import GF2Mat3


class SixTupleExample(NamedTuple):
    r1: GF2Mat3
    r2: GF2Mat3
    r3: GF2Mat3
    r4: GF2Mat3
    s3: GF2Mat3
    s4: GF2Mat3
    vertex_counts: tuple[int, int]  # (third-slot family, fourth-slot family)


class ModifiedExample(NamedTuple):
    r1: GF2Mat3
    r2: GF2Mat3
    r3: GF2Mat3
    pairs: tuple[tuple[GF2Mat3, GF2Mat3], ...]  # (r4, q4) as published


def _m(text: str) -> GF2Mat3:
    return GF2Mat3.parse(text)


SIXTUPLE_EXAMPLES: dict[int, SixTupleExample] = {
    1: SixTupleExample(
        r1=_m("100/010/011"),
        r2=_m("100/011/001"),
        r3=_m("011/001/110"),
        r4=_m("101/010/011"),
        s3=_m("100/010/001"),
        s4=_m("111/010/011"),
        vertex_counts=(14, 12),
    ),
    2: SixTupleExample(
        r1=_m("101/011/001"),
        r2=_m("100/010/011"),
        r3=_m("110/111/100"),
        r4=_m("100/011/101"),
        s3=_m("001/111/100"),
        s4=_m("100/111/101"),
        vertex_counts=(12, 12),
    ),
    3: SixTupleExample(
        r1=_m("100/011/001"),
        r2=_m("100/010/101"),
        r3=_m("011/111/110"),
        r4=_m("100/010/101"),
        s3=_m("100/111/110"),
        s4=_m("100/110/101"),
        vertex_counts=(12, 12),
    ),
    4: SixTupleExample(
        r1=_m("100/010/101"),
        r2=_m("100/010/101"),
        r3=_m("010/100/001"),
        r4=_m("010/011/111"),
        s3=_m("110/010/001"),
        s4=_m("011/101/111"),
        vertex_counts=(14, 14),
    ),
}

MODIFIED_EXAMPLES: dict[int, ModifiedExample] = {
    5: ModifiedExample(
        r1=_m("101/100/111"),
        r2=_m("100/011/001"),
        r3=_m("100/010/111"),
        pairs=((_m("100/010/101"), _m("100/010/111")),),
    ),
    6: ModifiedExample(
        r1=_m("100/010/101"),
        r2=_m("101/111/001"),
        r3=_m("101/110/001"),
        pairs=(
            (_m("100/010/001"), _m("110/010/001")),
            (_m("101/010/001"), _m("111/010/001")),
        ),
    ),
    7: ModifiedExample(
        r1=_m("100/010/101"),
        r2=_m("101/010/001"),
        r3=_m("100/010/101"),
        pairs=(
            (_m("100/010/001"), _m("110/010/001")),
            (_m("110/010/011"), _m("100/010/011")),
        ),
    ),
    8: ModifiedExample(
        r1=_m("100/010/101"),
        r2=_m("101/010/001"),
        r3=_m("010/100/001"),
        pairs=(
            (_m("100/010/001"), _m("110/010/001")),
            (_m("110/010/011"), _m("100/010/011")),
            (_m("101/010/001"), _m("111/010/001")),
            (_m("101/010/011"), _m("111/010/011")),
        ),
    ),
}

ALL_EXAMPLE_NUMBERS = tuple(sorted(SIXTUPLE_EXAMPLES) + sorted(MODIFIED_EXAMPLES))
