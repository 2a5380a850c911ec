"""Independent brute-force oracles kept deliberately separate from the
package's packed-arithmetic implementations."""

from tetragf2.gf2 import GF2Mat3, GF2Mat6


def naive_mul6(a: GF2Mat6, b: GF2Mat6) -> GF2Mat6:
    """Entry-by-entry mod-2 product on unpacked 6x6 lists."""
    ar, br = a.rows(), b.rows()
    out = [[sum(ar[i][k] * br[k][j] for k in range(6)) % 2 for j in range(6)] for i in range(6)]
    return GF2Mat6.from_rows(out)


def naive_embed(r: GF2Mat3, slot) -> GF2Mat6:
    rows = [[1 if i == j else 0 for j in range(6)] for i in range(6)]
    idx = [s - 1 for s in slot]
    rr = r.rows()
    for p in range(3):
        for q in range(3):
            rows[idx[p]][idx[q]] = rr[p][q]
    return GF2Mat6.from_rows(rows)


def naive_check_ds(r1, r2, r3, r4) -> bool:
    """Base relation via the naive product routine only."""
    slots = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6))
    ms = [naive_embed(m, s) for m, s in zip((r1, r2, r3, r4), slots)]
    lhs = naive_mul6(naive_mul6(naive_mul6(ms[0], ms[1]), ms[2]), ms[3])
    rhs = naive_mul6(naive_mul6(naive_mul6(ms[3], ms[2]), ms[1]), ms[0])
    return lhs == rhs
