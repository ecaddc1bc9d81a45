"""Command-line front end.

Exit codes: 0 all checks passed, 1 at least one failed check (or a
single-graph search error), 2 usage or input errors.  Reports are JSON;
equality scans can also emit CSV rows.  With ``--reproducible`` a fixed
spec and seed produce byte-identical report files.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from corecorona import __version__
from corecorona.fixtures import fixture, fixture_names
from corecorona.graphs import Graph, GraphFormatError, parse_edge_list, parse_graph6
from corecorona.harness import CampaignSpec, run_campaign, run_verify
from corecorona.lemmas import ALL_STATEMENTS
from corecorona.reports import write_report
from corecorona.search import (
    DEFAULT_SUBSET_CAP,
    largest_equality_collection,
    scan_equality,
    summarize_scan,
)
from corecorona.independence import DEFAULT_CAP, CapExceededError
from corecorona.worked_examples import format_table, rows_to_json, run_worked_examples

SCAN_CSV_HEADER = [
    "graph_id",
    "alpha",
    "core",
    "corona",
    "is_equality",
    "is_ke",
    "is_vwc",
    "unique_mis",
]


class UsageError(Exception):
    pass


def _load_graphs(path: str, fmt: str) -> list[tuple[str, Graph]]:
    """Load one or more graphs: graph6 line streams, one edge-list file, or
    comma-separated bundled fixture names."""
    if fmt == "fixture":
        names = [s.strip() for s in path.split(",") if s.strip()]
        unknown = [s for s in names if s not in fixture_names()]
        if unknown:
            raise UsageError(f"unknown fixtures {unknown}; have {sorted(fixture_names())}")
        return [(name, fixture(name)) for name in names]
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    if fmt == "edgelist":
        return [(path, parse_edge_list(text))]
    items = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            items.append((line, parse_graph6(line)))
    if not items:
        raise UsageError(f"no graphs found in {path}")
    return items


def _statements(arg: str | None) -> tuple[str, ...]:
    if not arg:
        return ALL_STATEMENTS
    chosen = tuple(s.strip() for s in arg.split(",") if s.strip())
    unknown = [s for s in chosen if s not in ALL_STATEMENTS]
    if unknown:
        raise UsageError(f"unknown statements {unknown}; have {list(ALL_STATEMENTS)}")
    return chosen


def _parse_n_range(arg: str) -> tuple[int, ...]:
    if ":" in arg:
        lo_s, hi_s = arg.split(":", 1)
        lo, hi = int(lo_s), int(hi_s)
        if hi < lo:
            raise UsageError(f"empty n range {arg!r}")
        return tuple(range(lo, hi + 1))
    return tuple(int(s) for s in arg.split(","))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corecorona",
        description="Exact checks for independence, core/corona, and matching statements.",
    )
    parser.add_argument("--version", action="version", version=f"corecorona {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the statement suite on input graphs")
    p_verify.add_argument("--input", required=True, help="file path or fixture name(s)")
    p_verify.add_argument(
        "--format", choices=["graph6", "edgelist", "fixture"], default=None,
        help="input format (default: fixture if the name matches, else graph6)",
    )
    p_verify.add_argument("--statements", default=None, help="comma-separated statement ids")
    p_verify.add_argument("--report", default=None, help="write the JSON report here")
    p_verify.add_argument("--omega-cap", type=int, default=DEFAULT_CAP)
    p_verify.add_argument("--seed", type=int, default=0, help="echoed into the report")
    p_verify.add_argument(
        "--exhaustive", action="store_true",
        help="range S over every independent set (graphs up to 12 vertices)",
    )
    p_verify.add_argument("--reproducible", action="store_true")

    p_examples = sub.add_parser("examples", help="replay the bundled worked examples")
    p_examples.add_argument("--report", default=None)
    p_examples.add_argument("--reproducible", action="store_true")

    p_campaign = sub.add_parser("campaign", help="seeded random-graph statement campaign")
    p_campaign.add_argument("--n-range", required=True, help="e.g. 4:14 or 5,7,9")
    p_campaign.add_argument("--p", required=True, help="comma-separated edge probabilities")
    p_campaign.add_argument("--count", type=int, required=True, help="graphs per (n, p) cell")
    p_campaign.add_argument("--seed", type=int, required=True)
    p_campaign.add_argument("--statements", default=None)
    p_campaign.add_argument("--omega-cap", type=int, default=DEFAULT_CAP)
    p_campaign.add_argument("--report", default=None)
    p_campaign.add_argument("--reproducible", action="store_true")

    p_search = sub.add_parser("search", help="open-problem explorers")
    p_search.add_argument("kind", choices=["equality-scan", "equality-collection"])
    p_search.add_argument("--input", required=True)
    p_search.add_argument("--format", choices=["graph6", "edgelist", "fixture"], default=None)
    p_search.add_argument("--subset-cap", type=int, default=DEFAULT_SUBSET_CAP)
    p_search.add_argument("--omega-cap", type=int, default=DEFAULT_CAP)
    p_search.add_argument("--report", default=None)
    p_search.add_argument("--reproducible", action="store_true")
    return parser


def _guess_format(args: argparse.Namespace) -> str:
    if args.format:
        return args.format
    if args.input in fixture_names() or all(
        part.strip() in fixture_names() for part in args.input.split(",")
    ):
        return "fixture"
    return "graph6"


def cmd_verify(args: argparse.Namespace) -> int:
    items = _load_graphs(args.input, _guess_format(args))
    if args.exhaustive:
        too_big = [gid for gid, g in items if g.n > 12]
        if too_big:
            raise UsageError(f"--exhaustive supports at most 12 vertices; too big: {too_big}")
    report, code = run_verify(
        items,
        statements=_statements(args.statements),
        omega_cap=args.omega_cap,
        exhaustive=args.exhaustive,
        reproducible=args.reproducible,
    )
    report["spec"]["seed"] = args.seed
    write_report(report, args.report)
    s = report["summary"]
    print(
        f"verify: {s['checks_run']} checks, {s['passed']} passed, {s['failed']} failed, "
        f"{s['skipped']} skipped, {s['errors']} errors"
    )
    return code


def cmd_examples(args: argparse.Namespace) -> int:
    rows, ok = run_worked_examples()
    print(format_table(rows))
    if args.report:
        write_report(
            {
                "version": __version__,
                "kind": "examples",
                "reproducible": args.reproducible,
                "rows": rows_to_json(rows),
                "summary": {"rows": len(rows), "passed": sum(r.ok for r in rows)},
            },
            args.report,
        )
    return 0 if ok else 1


def cmd_campaign(args: argparse.Namespace) -> int:
    try:
        p_values = tuple(float(s) for s in args.p.split(","))
    except ValueError:
        raise UsageError(f"bad probability list {args.p!r}") from None
    spec = CampaignSpec(
        n_values=_parse_n_range(args.n_range),
        p_values=p_values,
        count_per_cell=args.count,
        seed=args.seed,
        omega_cap=args.omega_cap,
        statements=_statements(args.statements),
    )
    report, code = run_campaign(spec, reproducible=args.reproducible)
    write_report(report, args.report)
    s = report["summary"]
    print(
        f"campaign: {s['graphs']} graphs, {s['checks_run']} checks, {s['passed']} passed, "
        f"{s['failed']} failed, {s['skipped']} skipped, {s['errors']} errors"
    )
    return code


def _scan_rows_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCAN_CSV_HEADER)
    for row in rows:
        if row.classification is None:
            writer.writerow([row.graph_id] + [""] * 7)
            continue
        c = row.classification
        writer.writerow(
            [
                c.graph_id,
                c.alpha,
                c.core_size,
                c.corona_size,
                int(c.is_equality),
                int(c.is_ke),
                int(c.is_vwc),
                int(c.has_unique_mis),
            ]
        )
    return buf.getvalue()


def cmd_search(args: argparse.Namespace) -> int:
    items = _load_graphs(args.input, _guess_format(args))
    if args.kind == "equality-scan":
        rows = list(scan_equality(items, cap=args.omega_cap))
        summary = summarize_scan(rows)
        csv_text = _scan_rows_csv(rows)
        if args.report and args.report.endswith(".csv"):
            with open(args.report, "w", encoding="ascii") as fh:
                fh.write(csv_text)
        elif args.report:
            write_report(
                {
                    "version": __version__,
                    "kind": "equality-scan",
                    "reproducible": args.reproducible,
                    "rows": [
                        {
                            "graph_id": r.graph_id,
                            "error": r.error,
                            "classification": None
                            if r.classification is None
                            else r.classification.__dict__,
                        }
                        for r in rows
                    ],
                    "summary": summary,
                },
                args.report,
            )
        else:
            print(csv_text, end="")
        print(
            f"scan: {summary['total']} graphs, {summary['equality']} equality, "
            f"{summary['non_equality']} non-equality, {summary['errors']} errors",
            file=sys.stderr,
        )
        return 0
    # equality-collection: single graph
    if len(items) != 1:
        raise UsageError("equality-collection expects exactly one input graph")
    graph_id, g = items[0]
    try:
        result = largest_equality_collection(g, subset_cap=args.subset_cap, cap=args.omega_cap)
    except (ValueError, CapExceededError) as exc:
        print(f"equality-collection failed: {exc}", file=sys.stderr)
        return 1
    payload = {
        "version": __version__,
        "kind": "equality-collection",
        "reproducible": args.reproducible,
        "graph_id": graph_id,
        "max_size": result.max_size,
        "omega_size": result.omega_size,
        "exhaustive": result.exhaustive,
        "witness": [[g.label(v) for v in member] for member in result.witness],
    }
    write_report(payload, args.report)
    print(f"equality-collection: max_size={result.max_size} of {result.omega_size}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "verify": cmd_verify,
        "examples": cmd_examples,
        "campaign": cmd_campaign,
        "search": cmd_search,
    }
    try:
        return handlers[args.command](args)
    except (UsageError, GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
