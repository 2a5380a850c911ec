"""Command-line frontend.

Exit codes: 0 = success / relation holds, 1 = verified false, 2 = usage or
parse error.  Matrices on the command line use the 'rrr/rrr/rrr' text
format.  All output is deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .examples import ALL_EXAMPLE_NUMBERS, MODIFIED_EXAMPLES, SIXTUPLE_EXAMPLES
from .gf2 import (
    GF2Mat3,
    check_ds_tetra,
    check_modified_pair,
    enumerate_gl3,
    is_genuinely_3d,
)
from .quantum import WeightedOp, check_quantum_pure, check_quantum_weighted, entries_of_T, quantize, vertex_count
from .search import (
    filter_nontrivial,
    iter_sixtuples,
    load_store,
    pair_count_histogram,
    save_store,
    search_all_modified,
    search_base,
    search_modified_pairs,
    search_sixtuples,
    set_threads,
    SixTuple,
    StoreFormatError,
)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2


class CliError(Exception):
    pass


def _parse_matrix(text: str) -> GF2Mat3:
    try:
        return GF2Mat3.parse(text)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def cmd_enumerate_gl(args) -> int:
    gl = enumerate_gl3()
    if args.count:
        print(len(gl))
    else:
        for m in gl:
            print(m.to_text())
    return EXIT_OK


def cmd_search_base(args) -> int:
    if args.all_matrices and not args.force:
        raise CliError("--all-matrices scans 512^4 quadruples; add --force to proceed")
    store = search_base(
        restrict_invertible=not args.all_matrices,
        threads=args.threads,
        allow_unrestricted=args.all_matrices,
    )
    save_store(store, args.out)
    print(f"solutions: {len(store)}")
    print(f"saved: {args.out}")
    return EXIT_OK


def cmd_search_sixtuples(args) -> int:
    try:
        store = load_store(args.store)
    except FileNotFoundError:
        raise CliError(f"store file not found: {args.store}") from None
    except StoreFormatError as exc:
        raise CliError(f"bad store file: {exc}") from None
    result = search_sixtuples(store)
    print(f"raw count: {result.raw_count}")
    print(f"deduplicated count: {result.dedup_count}")
    if args.nontrivial:
        for t in iter_sixtuples(store):
            if not filter_nontrivial(t):
                continue
            _print_sixtuple(t, args.json)
    return EXIT_OK


def _print_sixtuple(t: SixTuple, as_json: bool) -> None:
    if as_json:
        print(json.dumps({k: getattr(t, k).to_text() for k in t._fields}))
    else:
        print(" ".join(m.to_text() for m in t))


def cmd_search_modified(args) -> int:
    if args.triple:
        r1, r2, r3 = (_parse_matrix(t) for t in args.triple)
        pairs = search_modified_pairs(r1, r2, r3)
        _emit_modified((r1, r2, r3), pairs, args.json)
        return EXIT_OK
    if args.histogram:
        hist = pair_count_histogram(tuple(args.range) if args.range else None)
        for k, v in hist.items():
            print(f"pairs={k}: {v} triples")
        return EXIT_OK
    for triple, pairs in search_all_modified(tuple(args.range) if args.range else None):
        _emit_modified(triple, pairs, args.json)
    return EXIT_OK


def _emit_modified(triple, pairs, as_json: bool) -> None:
    t1, t2, t3 = (m.to_text() for m in triple)
    if as_json:
        print(
            json.dumps(
                {
                    "triple": [t1, t2, t3],
                    "pair_count": len(pairs),
                    "pairs": [[p.r4.to_text(), p.q4.to_text()] for p in pairs],
                }
            )
        )
    else:
        print(f"triple {t1} {t2} {t3}: {len(pairs)} pair(s)")
        for p in pairs:
            print(f"  {p.r4.to_text()} {p.q4.to_text()}")


def cmd_classify(args) -> int:
    m = _parse_matrix(args.matrix)
    verdict = is_genuinely_3d(m)
    print("genuinely-3d" if verdict else "not-genuinely-3d")
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_quantize(args) -> int:
    m = _parse_matrix(args.matrix)
    try:
        p = quantize(m)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    print(p.serialize())
    return EXIT_OK


def cmd_check(args) -> int:
    if args.ds:
        mats = [_parse_matrix(t) for t in args.ds]
        holds = check_ds_tetra(*mats)
    else:
        mats = [_parse_matrix(t) for t in args.modified]
        holds = check_modified_pair(*mats)
    print("holds" if holds else "does not hold")
    return EXIT_OK if holds else EXIT_FALSE


def _run_checks(checks) -> bool:
    """Print one PASS/FAIL line per named check; return overall verdict."""
    all_ok = True
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        all_ok = all_ok and ok
    return all_ok


def _verify_sixtuple_example(n: int) -> bool:
    ex = SIXTUPLE_EXAMPLES[n]
    q1, q2 = quantize(ex.r1), quantize(ex.r2)
    q3, qs3 = quantize(ex.r3), quantize(ex.s3)
    q4, qs4 = quantize(ex.r4), quantize(ex.s4)
    w3 = WeightedOp(8, (("alpha", q3), ("beta", qs3)))
    w4 = WeightedOp(8, (("lambda", q4), ("mu", qs4)))
    v3, v4 = vertex_count(w3), vertex_count(w4)
    checks = [
        ("direct-sum relation (r3, r4)", check_ds_tetra(ex.r1, ex.r2, ex.r3, ex.r4)),
        ("direct-sum relation (r3, s4)", check_ds_tetra(ex.r1, ex.r2, ex.r3, ex.s4)),
        ("direct-sum relation (s3, r4)", check_ds_tetra(ex.r1, ex.r2, ex.s3, ex.r4)),
        ("direct-sum relation (s3, s4)", check_ds_tetra(ex.r1, ex.r2, ex.s3, ex.s4)),
        ("s3 differs from r3", ex.s3 != ex.r3),
        ("s4 differs from r4", ex.s4 != ex.r4),
        ("quantum relation (r3, r4)", check_quantum_pure(q1, q2, q3, q4, q4)),
        ("quantum relation (r3, s4)", check_quantum_pure(q1, q2, q3, qs4, qs4)),
        ("quantum relation (s3, r4)", check_quantum_pure(q1, q2, qs3, q4, q4)),
        ("quantum relation (s3, s4)", check_quantum_pure(q1, q2, qs3, qs4, qs4)),
        ("weighted quantum relation", check_quantum_weighted(q1, q2, w3, w4)),
        ("genuinely-3d filter", filter_nontrivial(SixTuple(*ex[:6]))),
        (f"vertex counts slot3={ex.vertex_counts[0]} slot4={ex.vertex_counts[1]}",
         (v3, v4) == ex.vertex_counts),
        ("nonnegative entries at positive parameters",
         bool((w3.matrix() >= 0).all() and (w4.matrix() >= 0).all())),
    ]
    ok = _run_checks(checks)
    print(f"vertex counts: slot3: {v3}, slot4: {v4}")
    return ok


def _verify_modified_example(n: int) -> bool:
    ex = MODIFIED_EXAMPLES[n]
    q1, q2, q3 = quantize(ex.r1), quantize(ex.r2), quantize(ex.r3)
    w3 = WeightedOp(8, ((1, q3),))
    checks = []
    for i, (r4, q4) in enumerate(ex.pairs, start=1):
        p4, pq4 = quantize(r4), quantize(q4)
        entries = entries_of_T(r4, q4)
        wT = WeightedOp(8, ((1, p4), (1, pq4)))
        checks += [
            (f"pair {i}: modified relations hold", check_modified_pair(ex.r1, ex.r2, ex.r3, r4, q4)),
            (f"pair {i}: quantum relation forward", check_quantum_pure(q1, q2, q3, p4, pq4)),
            (f"pair {i}: quantum relation swapped", check_quantum_pure(q1, q2, q3, pq4, p4)),
            (f"pair {i}: summed-operator entries in {{0,1,2}}",
             set(entries) <= {0, 1, 2}),
            (f"pair {i}: summed-operator quantum relation",
             check_quantum_weighted(q1, q2, w3, wT)),
        ]
    found = search_modified_pairs(ex.r1, ex.r2, ex.r3)
    expected = sorted(
        (min(a.bits, b.bits), max(a.bits, b.bits)) for a, b in ex.pairs
    )
    got = [(p.r4.bits, p.q4.bits) for p in found]
    checks += [
        (f"search recovers all {len(ex.pairs)} listed pair(s)",
         set(expected) <= set(got)),
        ("search finds exactly the listed pairs", got == expected),
    ]
    return _run_checks(checks)


def cmd_verify_example(args) -> int:
    n = args.number
    if n in SIXTUPLE_EXAMPLES:
        ok = _verify_sixtuple_example(n)
    else:
        ok = _verify_modified_example(n)
    print("all checks passed" if ok else "SOME CHECKS FAILED")
    return EXIT_OK if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetragf2",
        description="Exact searches and checks for two-color tetrahedron relations over GF(2)",
    )
    parser.add_argument("--threads", type=int, default=None,
                        help="worker threads for searches (results are independent of N)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate-gl", help="list the 168 invertible 3x3 matrices")
    p.add_argument("--count", action="store_true", help="print only the count")
    p.set_defaults(func=cmd_enumerate_gl)

    p = sub.add_parser("search-base", help="exhaustive search for base solutions")
    p.add_argument("--out", required=True, help="store file to write")
    p.add_argument("--all-matrices", action="store_true",
                   help="search all 512 matrices instead of the invertible ones")
    p.add_argument("--force", action="store_true",
                   help="confirm the unrestricted (512^4) search")
    p.set_defaults(func=cmd_search_base)

    p = sub.add_parser("search-sixtuples", help="count/stream six-tuples from a store")
    p.add_argument("--store", required=True, help="store file from search-base")
    p.add_argument("--nontrivial", action="store_true",
                   help="also stream tuples passing the genuinely-3d filter")
    p.add_argument("--json", action="store_true", help="JSON lines output")
    p.set_defaults(func=cmd_search_sixtuples)

    p = sub.add_parser("search-modified", help="search for modified pairs")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--triple", nargs=3, metavar="M", help="one triple to scan")
    g.add_argument("--all", action="store_true", help="scan all invertible triples")
    p.add_argument("--histogram", action="store_true",
                   help="with --all: print the pair-count distribution only")
    p.add_argument("--range", nargs=2, type=int, metavar=("LO", "HI"),
                   help="with --all: first-factor index sub-range")
    p.add_argument("--json", action="store_true", help="JSON lines output")
    p.set_defaults(func=cmd_search_modified)

    p = sub.add_parser("verify-example", help="run the verification battery for a worked example")
    p.add_argument("number", type=int, choices=ALL_EXAMPLE_NUMBERS)
    p.set_defaults(func=cmd_verify_example)

    p = sub.add_parser("classify", help="genuinely-3d verdict for one matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("quantize", help="print the 8-state permutation of a matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_quantize)

    p = sub.add_parser("check", help="check a relation for explicit matrices")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--ds", nargs=4, metavar="M", help="base relation for a quadruple")
    g.add_argument("--modified", nargs=5, metavar="M",
                   help="modified pair of relations for (m1 m2 m3 r4 q4)")
    p.set_defaults(func=cmd_check)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.threads is not None:
        set_threads(args.threads)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
