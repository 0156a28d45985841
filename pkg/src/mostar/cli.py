"""Command-line front end.

Subcommands:
  compute          edge Mostar summaries for graph6 input lines
  verify-theorem1  exhaustive check of the tricyclic maxima table
  verify-theorem2  exhaustive check of the bicyclic maxima table
  atlas            run family discovery, write the registry and report
  lemmas           verify the pendant-shift delta rules

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 partial (skipped inputs or unresolved families).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .families import FamilyRegistry, builtin_registry
from .graphs import Graph6Error, GraphError, is_connected, parse_graph6
from .indices import mostar_summary
from .shifts import run_shift_suite
from .verify import run_atlas, verify_bicyclic, verify_tricyclic


def _load_registry(path: str | None) -> FamilyRegistry:
    if path:
        return FamilyRegistry.load(path)
    default = Path("families.json")
    if default.exists():
        return FamilyRegistry.load(default)
    return builtin_registry()


def _write_output(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_sizes(args, lo: int, hi: int, default: tuple[int, int]) -> list[int]:
    if args.size is not None:
        sizes = [args.size]
    elif args.range is not None:
        a, _, b = args.range.partition("-")
        sizes = list(range(int(a), int(b or a) + 1))
    else:
        sizes = list(range(default[0], default[1] + 1))
    hi_eff = hi + 1 if getattr(args, "deep", False) else hi
    bad = [m for m in sizes if not lo <= m <= hi_eff]
    if bad:
        raise SystemExit(
            f"sizes {bad} outside supported range {lo}..{hi_eff}"
            + ("" if getattr(args, "deep", False) else " (use --deep for the next size)")
        )
    return sizes


def cmd_compute(args) -> int:
    lines: list[tuple[str, int, str]] = []  # (line, number, source)
    if args.inputs:
        for fname in args.inputs:
            try:
                text = Path(fname).read_text()
            except OSError as exc:
                print(f"error: cannot read {fname}: {exc}", file=sys.stderr)
                return 2
            for i, line in enumerate(text.splitlines(), start=1):
                if line.strip():
                    lines.append((line, i, fname))
    else:
        for i, line in enumerate(sys.stdin, start=1):
            if line.strip():
                lines.append((line, i, "<stdin>"))
    out_rows = []
    skipped = 0
    for line, no, src in lines:
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            print(f"{src}:{no}: parse error: {exc}", file=sys.stderr)
            skipped += 1
            continue
        if not is_connected(g):
            print(f"{src}:{no}: disconnected graph skipped", file=sys.stderr)
            skipped += 1
            continue
        out_rows.append(mostar_summary(g))
    if args.format == "json":
        text = "".join(json.dumps(r.to_dict(), sort_keys=True) + "\n" for r in out_rows)
    else:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["graph6", "n", "m", "edge_mostar"])
        for r in out_rows:
            g = parse_graph6(r.graph6)
            w.writerow([r.graph6, g.n, g.m, r.edge_mostar])
        text = buf.getvalue()
    _write_output(text, args.output)
    return 3 if skipped else 0


def _emit_rows(rows, args) -> None:
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in rows], indent=2, sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["m", "expected_max", "observed_max",
                    "observed_maximizer_count", "status", "note"])
        for r in rows:
            w.writerow([r.m, r.expected_max, r.observed_max,
                        r.observed_maximizer_count, r.status, r.note])
        text = buf.getvalue()
    _write_output(text, args.output)


def cmd_verify_theorem1(args) -> int:
    sizes = _parse_sizes(args, lo=6, hi=12, default=(7, 12))
    rows = verify_tricyclic(
        sizes,
        registry=_load_registry(args.registry),
        workers=args.threads,
        histogram=args.histogram,
    )
    _emit_rows(rows, args)
    return 0 if all(r.status != "FAIL" for r in rows) else 1


def cmd_verify_theorem2(args) -> int:
    sizes = _parse_sizes(args, lo=5, hi=11, default=(5, 10))
    rows = verify_bicyclic(
        sizes,
        registry=_load_registry(args.registry),
        workers=args.threads,
        histogram=args.histogram,
    )
    _emit_rows(rows, args)
    return 0 if all(r.status != "FAIL" for r in rows) else 1


def cmd_atlas(args) -> int:
    result = run_atlas(
        tri_max_size=args.max_size,
        bi_max_size=min(args.max_size, 10),
        workers=args.threads,
    )
    result.registry.save(args.output)
    report_text = json.dumps(result.report.to_dict(), indent=2, sort_keys=True) + "\n"
    if args.report:
        Path(args.report).write_text(report_text)
    else:
        sys.stdout.write(report_text)
    print(f"registry written to {args.output}", file=sys.stderr)
    if result.report.unresolved:
        print(f"unresolved families: {sorted(result.report.unresolved)}",
              file=sys.stderr)
        return 3
    return 0


def cmd_lemmas(args) -> int:
    report = run_shift_suite(count=args.count, seed=args.seed)
    text = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    _write_output(text, args.output)
    statuses = report.statuses()
    return 0 if all(s in ("MATCH", "SKIPPED") for s in statuses.values()) else 1


def _add_common(p, default_threads) -> None:
    p.add_argument("--threads", type=int, default=default_threads,
                   help="enumeration worker processes")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", help="write to this path instead of stdout")
    p.add_argument("--histogram", action="store_true",
                   help="collect full value histograms (larger output)")
    p.add_argument("--registry", help="families registry JSON "
                   "(default: ./families.json if present)")
    p.add_argument("--size", type=int, help="verify a single size m")
    p.add_argument("--range", help="verify sizes A-B inclusive, e.g. 7-12")
    p.add_argument("--deep", action="store_true",
                   help="allow the next size up (slow)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mostar",
        description="edge Mostar index computation and extremal verification",
    )
    default_threads = os.cpu_count() or 1
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="summaries for graph6 input")
    p.add_argument("inputs", nargs="*", help="graph6 files (default: stdin)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify-theorem1", help="tricyclic maxima table")
    _add_common(p, default_threads)
    p.set_defaults(func=cmd_verify_theorem1)

    p = sub.add_parser("verify-theorem2", help="bicyclic maxima table")
    _add_common(p, default_threads)
    p.set_defaults(func=cmd_verify_theorem2)

    p = sub.add_parser("atlas", help="discover families, write registry")
    p.add_argument("--output", default="families.json")
    p.add_argument("--report", help="write the discovery report here")
    p.add_argument("--max-size", type=int, default=12,
                   help="largest tricyclic size to enumerate")
    p.add_argument("--threads", type=int, default=default_threads)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("lemmas", help="verify pendant-shift delta rules")
    p.add_argument("--count", type=int, default=20,
                   help="parameter tuples per rule and region")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_lemmas)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, Graph6Error, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
