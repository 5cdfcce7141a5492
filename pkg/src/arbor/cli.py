"""``arbor`` command line.

Exit codes: 0 ok/verified, 1 verification mismatch, 2 usage error,
3 network or IO error.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field

from . import oeis_client, sequence, trees

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3

ENUMERATE_CAP = 12
STRUCTURAL_CAP = 12
NAIVE_CAP = 7
CROSS_METHOD_CAP = 40

# sequence id -> offset from computed index to b-file index
OEIS_OFFSETS = {"A345973": 0, "A346787": 1}


class UsageError(Exception):
    pass


def _err(msg: str) -> None:
    print(f"arbor: {msg}", file=sys.stderr)


# -- terms -----------------------------------------------------------------


def cmd_terms(args: argparse.Namespace) -> int:
    if args.upto < 1:
        raise UsageError("--upto must be >= 1")
    if args.method != "gf" and args.upto > sequence.RECURRENCE_LIMIT:
        raise UsageError(
            f"method {args.method} enumerates partitions of every n <= upto and is capped at "
            f"{sequence.RECURRENCE_LIMIT}; use --method gf for larger ranges"
        )
    values = sequence.terms(args.upto, args.method, sequence.SequenceTable())
    if args.format == "json":
        print(json.dumps({"method": args.method, "values": [str(v) for v in values]}))
    else:
        for n, v in enumerate(values, start=1):
            print(n, v)
    return EXIT_OK


# -- enumerate -------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    n = args.n
    if n < 0:
        raise UsageError("n must be >= 0")
    if n > ENUMERATE_CAP and not args.force:
        raise UsageError(f"n > {ENUMERATE_CAP} produces a lot of output; pass --force to proceed")
    found = trees.enumerate_structural(n)
    if args.count_only:
        print(len(found))
    elif args.format == "json":
        print(json.dumps({"n": n, "count": len(found), "trees": [trees.serialize(t) for t in found]}))
    elif args.format == "dot":
        for i, t in enumerate(found):
            sys.stdout.write(trees.to_dot(t, name=f"t{i}"))
    else:
        for t in found:
            print(trees.serialize(t))
    return EXIT_OK


# -- verify ----------------------------------------------------------------


@dataclass
class VerifyRow:
    n: int
    values: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return len(set(self.values.values())) <= 1


@dataclass
class VerifyReport:
    rows: list[VerifyRow]
    columns: list[str]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def first_failure(self) -> VerifyRow | None:
        return next((r for r in self.rows if not r.ok), None)

    def render(self) -> str:
        head = ["n"] + self.columns + ["status"]
        body = []
        for r in self.rows:
            cells = [str(r.n)] + [str(r.values[c]) if c in r.values else "-" for c in self.columns]
            body.append(cells + ["pass" if r.ok else "FAIL"])
        widths = [max(len(row[i]) for row in [head] + body) for i in range(len(head))]
        fmt = "  ".join(f"{{:>{w}}}" for w in widths)
        return "\n".join(fmt.format(*row) for row in [head] + body)


def run_verify(
    upto: int,
    oracle: str = "both",
    *,
    structural_max: int = STRUCTURAL_CAP,
    naive_max: int = NAIVE_CAP,
    reference: sequence.SequenceTable | None = None,
) -> VerifyReport:
    """Cross-check the three formulas and the enumerators for 2 <= n <= upto.

    Each formula runs on its own fresh table.  ``reference`` replaces the
    generating-function table, which is how the failure path is exercised.
    """
    if upto < 2:
        raise UsageError("--upto must be >= 2")
    gf = reference if reference is not None else sequence.a_gf(upto)
    eq1_table, eq3_table = sequence.SequenceTable(), sequence.SequenceTable()
    columns = ["gf"]
    cross_max = min(upto, CROSS_METHOD_CAP)
    if cross_max >= 2:
        columns += ["eq1", "eq3"]
    use_struct = oracle in ("structural", "both")
    use_naive = oracle in ("naive", "both")
    if use_struct:
        columns.append("structural")
    if use_naive:
        columns.append("naive")
    rows = []
    for n in range(2, upto + 1):
        row = VerifyRow(n, {"gf": gf[n]})
        if n <= cross_max:
            row.values["eq1"] = sequence.a(n, "eq1", eq1_table)
            row.values["eq3"] = sequence.a(n, "eq3", eq3_table)
        if use_struct and n <= structural_max:
            row.values["structural"] = len(trees.enumerate_structural(n))
        if use_naive and n <= naive_max:
            row.values["naive"] = trees.enumerate_naive(n)
        rows.append(row)
    return VerifyReport(rows, columns)


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verify(args.upto, args.oracle, structural_max=args.structural_max, naive_max=args.naive_max)
    print(report.render())
    bad = report.first_failure()
    if bad is not None:
        vals = ", ".join(f"{k}={v}" for k, v in bad.values.items())
        _err(f"mismatch at n={bad.n}: {vals}")
        return EXIT_MISMATCH
    print(f"verified 2..{args.upto}")
    return EXIT_OK


# -- oeis ------------------------------------------------------------------


def computed_for(sequence_id: str, upto: int) -> dict[int, int]:
    """Values to hold against the b-file, keyed by computed index.

    A346787 is compared from n = 2, where a tree size is an honest edge
    count with a nonempty family behind it.
    """
    if sequence_id == "A345973":
        return dict(sequence.a_gf(upto).items())
    return {n: trees.count_no_gray(n) for n in range(2, upto + 1)}


def cmd_oeis(args: argparse.Namespace) -> int:
    sid = args.id
    if sid not in OEIS_OFFSETS:
        raise UsageError(f"unsupported sequence {sid!r}; choose from {sorted(OEIS_OFFSETS)}")
    if args.upto < 2:
        raise UsageError("--upto must be >= 2")
    try:
        if args.offline is not None:
            ref = oeis_client.fetch_bfile(sid, "file", args.offline)
        elif args.bundled:
            ref = oeis_client.fetch_bfile(sid, "file")
        else:
            ref = oeis_client.fetch_bfile(sid, "network", refresh=args.refresh)
    except oeis_client.OEISError as exc:
        _err(str(exc))
        return EXIT_IO
    offset = OEIS_OFFSETS[sid]
    computed = computed_for(sid, args.upto)
    try:
        mismatches = oeis_client.compare(computed, ref, offset)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ref_idx = {e.index for e in ref}
    compared = sum(1 for n in computed if n + offset in ref_idx)
    if args.format == "json":
        print(json.dumps({"id": sid, "offset": offset, "compared": compared,
                          "mismatches": [m.as_json() for m in mismatches]}))
    else:
        for m in mismatches:
            print(f"n={m.n} computed={m.computed} reference[{m.n + offset}]={m.reference}")
    if mismatches:
        _err(f"{len(mismatches)} mismatch(es) against {sid}")
        return EXIT_MISMATCH
    if args.format != "json":
        print(f"{sid}: {compared} terms agree (offset {offset})")
    return EXIT_OK


# -- entry -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arbor", description="Compute and verify OEIS A345973 and its tree family.")
    p.add_argument("-v", "--verbose", action="store_true", help="log to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("terms", help="print a(1..upto)")
    t.add_argument("--upto", type=int, default=10)
    t.add_argument("--method", choices=sequence.METHODS, default="gf",
                   help=f"gf scales to n ~ 1000; eq1/eq3 are capped at {sequence.RECURRENCE_LIMIT}")
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.set_defaults(func=cmd_terms)

    e = sub.add_parser("enumerate", help="list every tree of size n")
    e.add_argument("n", type=int)
    e.add_argument("--format", choices=("text", "dot", "json"), default="text")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--force", action="store_true", help=f"allow n > {ENUMERATE_CAP}")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="cross-check formulas and enumerators")
    v.add_argument("--upto", type=int, default=10)
    v.add_argument("--oracle", choices=("structural", "naive", "both"), default="both")
    v.add_argument("--structural-max", type=int, default=STRUCTURAL_CAP,
                   help=f"largest n enumerated structurally (default {STRUCTURAL_CAP})")
    v.add_argument("--naive-max", type=int, default=NAIVE_CAP,
                   help=f"largest n brute-forced (default {NAIVE_CAP}; n=7 takes ~20 s)")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oeis", help="compare against an OEIS b-file")
    o.add_argument("id", help="A345973 or A346787")
    o.add_argument("--upto", type=int, default=10)
    src = o.add_mutually_exclusive_group()
    src.add_argument("--offline", metavar="PATH", help="read the b-file from PATH")
    src.add_argument("--bundled", action="store_true", help="use the b-file shipped with the package")
    o.add_argument("--refresh", action="store_true", help="ignore the cache and download again")
    o.add_argument("--format", choices=("text", "json"), default="text")
    o.set_defaults(func=cmd_oeis)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        _err(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
