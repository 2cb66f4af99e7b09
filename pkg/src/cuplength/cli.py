"""Command-line interface.

Subcommands: compute, table1, table2, example102, verify, oeis, scan.
Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
All output is deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bfile import BFileParseError, compare_bfile, detect_offsets, parse_bfile
from .bounds import zcl
from .golden import load_golden
from .stability import lprop_bound, s_formula, sharp_threshold, z3_characterization
from .verify import (
    check_formula_equivalences,
    check_hti_oracle,
    check_knapsack_oracle,
    check_m_oracle,
    check_poly_oracle,
)


def cmd_compute(args: argparse.Namespace) -> int:
    rep = zcl(args.k, args.n)
    fields = [
        ("n", rep.n),
        ("k", rep.k),
        ("zcl", rep.zcl),
        ("g", rep.g),
        ("h", rep.h),
        ("witness", rep.witness),
        ("sharp", rep.sharp),
    ]
    if args.format == "json":
        print(json.dumps(dict(fields)))
    elif args.format == "csv":
        print(",".join(name for name, _ in fields))
        print(",".join(_csv_value(v) for _, v in fields))
    else:
        print(" ".join(f"{name}={_csv_value(v)}" for name, v in fields))
    return 0


def _csv_value(v: object) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def cmd_table1(args: argparse.Namespace) -> int:
    cells = {(c.k, c.n): c.expected for c in load_golden() if c.source == "table1"}
    ks = sorted({k for k, _ in cells})
    ns = sorted({n for _, n in cells})
    width = max(len(str(v)) for v in cells.values()) + 2
    header = "k\\n" + "".join(f"{n:>{width}}" for n in ns)
    print(header)
    mismatches = []
    for k in ks:
        row = [f"{k:<3}"]
        for n in ns:
            got = zcl(k, n).zcl
            row.append(f"{got:>{width}}")
            if got != cells[(k, n)]:
                mismatches.append((k, n, got, cells[(k, n)]))
        print("".join(row))
    print(f"{len(cells)} cells, {len(mismatches)} mismatches")
    for k, n, got, expected in mismatches:
        print(f"MISMATCH k={k} n={n}: got {got}, expected {expected}")
    return 1 if mismatches else 0


def cmd_table2(args: argparse.Namespace) -> int:
    cells = [c for c in load_golden() if c.kind == "s"]
    mismatches = []
    for c in cells:
        got = s_formula(c.n).s
        print(f"s({c.n}) = {got}  [{c.source}]")
        if got != c.expected:
            mismatches.append((c.n, got, c.expected))
    conventions_ok = True
    for v in range(1, 11):
        below = s_formula((1 << v) - 1).s
        at = s_formula(1 << v).s
        if below != 2 or at != 3:
            conventions_ok = False
            print(f"MISMATCH conventions at v={v}: s(2^v-1)={below}, s(2^v)={at}")
    print(f"{len(cells)} values, {len(mismatches)} mismatches; "
          f"2-power conventions {'ok' if conventions_ok else 'BROKEN'}")
    for n, got, expected in mismatches:
        print(f"MISMATCH n={n}: got {got}, expected {expected}")
    return 1 if mismatches or not conventions_ok else 0


def _piecewise_102(k: int) -> int:
    if k <= 5:
        return 102 * k - (127 - 25 * k)
    if k <= 7:
        return 102 * k - (7 - k)
    return 102 * k


def cmd_example102(args: argparse.Namespace) -> int:
    bad = 0
    for k in range(2, 11):
        got = zcl(k, 102).zcl
        want = _piecewise_102(k)
        mark = "" if got == want else "  MISMATCH"
        print(f"k={k:<2} zcl={got}  piecewise={want}{mark}")
        bad += got != want
    # seam values must agree from both adjacent branches
    seams_ok = (
        102 * 5 - (127 - 25 * 5) == 102 * 5 - (7 - 5)
        and 102 * 7 - (7 - 7) == 102 * 7
    )
    print(f"branch agreement at k=5 and k=7: {'ok' if seams_ok else 'BROKEN'}")
    return 1 if bad or not seams_ok else 0


_VERIFY_DEFAULTS = {"formulas": (4096, 16), "oracles": (40, 6), "tiny": (8, 4)}


def cmd_verify(args: argparse.Namespace) -> int:
    default_n, default_k = _VERIFY_DEFAULTS[args.level]
    n_max = args.n_max if args.n_max is not None else default_n
    k_max = args.k_max if args.k_max is not None else default_k
    if args.level == "formulas":
        results = [check_formula_equivalences(n_max, k_max)]
    elif args.level == "oracles":
        results = [
            check_m_oracle(n_max, max(1, k_max - 1)),
            check_hti_oracle(n_max, k_max),
            check_knapsack_oracle(n_max, k_max),
        ]
    else:
        results = [check_poly_oracle(n_max, k_max)]
    bad = 0
    for res in results:
        print(res.summary())
        for f in res.failures:
            print(f"  FAIL {f}")
        for s in res.skipped[:10]:
            print(f"  skipped {s}")
        if len(res.skipped) > 10:
            print(f"  ... {len(res.skipped) - 10} more skipped")
        bad += not res.ok
    return 1 if bad else 0


def cmd_oeis(args: argparse.Namespace) -> int:
    try:
        text = open(args.file, encoding="ascii").read()
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return 2
    try:
        entries = parse_bfile(text)
    except BFileParseError as exc:
        print(f"parse error in {args.file}: {exc}", file=sys.stderr)
        return 2
    if not entries:
        print(f"{args.file}: no entries", file=sys.stderr)
        return 2

    def fn(n: int) -> int:
        return z3_characterization(n) + 1

    if args.offset is not None:
        offset = args.offset
        print(f"using supplied offset {offset} (file index i is n = i - {offset})")
    else:
        candidates = detect_offsets(entries, fn)
        if not candidates:
            print("alignment failure: no index offset matches the first entries")
            return 1
        offset = candidates[0]
        note = "" if len(candidates) == 1 else f" (of candidates {candidates})"
        print(f"detected offset {offset}{note} (file index i is n = i - {offset})")
    report = compare_bfile(entries, fn, offset)
    print(f"{report.matched} of {report.total} entries match")
    if report.first_mismatch is not None:
        i, n, filev, ours = report.first_mismatch
        print(f"first mismatch at index {i} (n={n}): file {filev}, computed {ours}")
        return 1
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    print("n,s,threshold,lprop,interesting")
    for n in range(args.n_max + 1):
        s = s_formula(n).s
        thr = sharp_threshold(n).threshold
        if thr is None:
            print(f"{n},{s},,,0")
            continue
        lp = lprop_bound(n)
        interesting = 1 if thr < lp else 0
        print(f"{n},{s},{thr},{lp},{interesting}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuplength",
        description="Zero-divisor cup-length bounds for TC_k of real projective space",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="report zcl, deficit, height for one (k, n)")
    p.add_argument("--k", type=int, required=True, help="number of factors, >= 2")
    p.add_argument("--n", type=int, required=True, help="projective space dimension")
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table1", help="render the zcl grid and diff against golden data")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="render s(n) values and diff against golden data")
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("example102", help="check the n=102 piecewise expression")
    p.set_defaults(func=cmd_example102)

    p = sub.add_parser("verify", help="run cross-check suites")
    p.add_argument("--level", choices=("formulas", "oracles", "tiny"),
                   default="formulas")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis", help="compare a local b-file against zcl_3 + 1")
    p.add_argument("--file", required=True, help="path to the b-file")
    p.add_argument("--offset", type=int, default=None,
                   help="index shift: file index i holds the value for n = i - offset")
    p.set_defaults(func=cmd_oeis)

    p = sub.add_parser("scan", help="CSV of s(n) and sharpness thresholds")
    p.add_argument("--n-max", type=int, default=50)
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
