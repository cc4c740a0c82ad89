"""Command-line interface.

Exit codes: 0 for a clean run, 2 when the analysis succeeded but emitted
diagnostics (the report is still produced), 1 for fatal errors such as a
missing source tree or an unusable snapshot store. Errors are reported as
single-line messages, never tracebacks.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import TOOL_NAME, __version__
from .analysis import NoJavaSourcesError, analyze_tree, snapshot_from_report
from .architecture import EDGE_WEIGHT_PAIRS, EDGE_WEIGHTS
from .evolution import (
    METRICS,
    SnapshotStore,
    StoreError,
    compare_snapshots,
    compute_trend,
)
from .report import human_summary, render_json, report_to_dict, write_csv_files

EXIT_OK = 0
EXIT_FATAL = 1
EXIT_DIAGNOSTICS = 2

_METRIC_TITLES = {
    "avg_p_q": "average package quality",
    "s_a": "architecture score",
    "m_i": "modularity index",
}


class _CliError(Exception):
    """Fatal usage or runtime error; the message goes to stderr."""


class _ArgumentParser(argparse.ArgumentParser):
    """argparse variant that reports usage errors as fatal errors.

    The default parser exits with status 2, which this tool reserves for
    "analysis completed with diagnostics"; usage problems must be status 1.
    """

    def error(self, message: str):
        raise _CliError(f"{message}\n{self.format_usage().rstrip()}")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog=TOOL_NAME,
        description=(
            "Measure the modularity of a Java source tree: per-class quality, "
            "package coupling, and a system-level modularity index."
        ),
        epilog=(
            "exit codes: 0 clean, 2 analysis produced diagnostics "
            "(report still written), 1 fatal error"
        ),
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze a source tree and emit a report")
    analyze.add_argument("root", help="directory containing Java sources")
    analyze.add_argument(
        "--format", choices=("json", "csv"), default="json", help="report format"
    )
    analyze.add_argument(
        "--out",
        help="output path: a file for json, a directory for csv (default: json to stdout)",
    )
    analyze.add_argument(
        "--edge-weight",
        choices=EDGE_WEIGHTS,
        default=EDGE_WEIGHT_PAIRS,
        help="count each class pair once, or every reference occurrence",
    )
    analyze.add_argument(
        "--store", help="snapshot store directory to record this analysis in"
    )
    analyze.add_argument("--label", help="snapshot label, e.g. a release version")
    analyze.add_argument(
        "--overwrite",
        action="store_true",
        help="replace an existing snapshot with the same label",
    )
    analyze.add_argument(
        "--reproducible",
        action="store_true",
        help="omit timestamps so identical trees give byte-identical reports",
    )
    analyze.add_argument(
        "--jobs", type=int, default=1, help="parse files with this many threads"
    )

    trend = sub.add_parser("trend", help="regress a metric across stored snapshots")
    trend.add_argument("--store", required=True, help="snapshot store directory")
    trend.add_argument(
        "--metric", choices=METRICS, required=True, help="which metric to regress"
    )
    trend.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )

    compare = sub.add_parser("compare", help="diff two stored snapshots")
    compare.add_argument("--store", required=True, help="snapshot store directory")
    compare.add_argument("before", help="label of the older snapshot")
    compare.add_argument("after", help="label of the newer snapshot")
    compare.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    return parser


# ---------------------------------------------------------------------------
# subcommands


def _run_analyze(args: argparse.Namespace) -> int:
    if (args.store is None) != (args.label is None):
        raise _CliError("--store and --label must be used together")
    if args.format == "csv" and not args.out:
        raise _CliError("--format csv needs --out DIRECTORY")
    if args.jobs < 1:
        raise _CliError("--jobs must be at least 1")

    try:
        result = analyze_tree(args.root, edge_weight=args.edge_weight, jobs=args.jobs)
    except NoJavaSourcesError as exc:
        raise _CliError(str(exc)) from exc

    if args.store is not None:
        try:
            store = SnapshotStore(args.store)
            store.save(snapshot_from_report(result, args.label), overwrite=args.overwrite)
        except StoreError as exc:
            raise _CliError(str(exc)) from exc

    if args.format == "json":
        text = render_json(report_to_dict(result, reproducible=args.reproducible))
        if args.out:
            out = Path(args.out)
            if out.is_dir():
                raise _CliError(f"--out {args.out} is a directory; json needs a file path")
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    else:
        write_csv_files(result, args.out)

    print(human_summary(result), file=sys.stderr)
    return EXIT_DIAGNOSTICS if result.diagnostics else EXIT_OK


def _run_trend(args: argparse.Namespace) -> int:
    try:
        trend = compute_trend(SnapshotStore(args.store), args.metric)
    except StoreError as exc:
        raise _CliError(str(exc)) from exc
    if args.format == "json":
        sys.stdout.write(render_json(trend.to_dict()))
        return EXIT_OK
    title = _METRIC_TITLES[trend.metric]
    lines = [f"{title} across {len(trend.values)} snapshots"]
    for label, value in zip(trend.labels, trend.values):
        lines.append(f"  {label}: {value:.6g}")
    lines.append(f"  slope: {trend.slope:+.6g} per snapshot ({trend.direction})")
    if trend.ordering_note:
        lines.append(f"  note: {trend.ordering_note}")
    print("\n".join(lines))
    return EXIT_OK


def _run_compare(args: argparse.Namespace) -> int:
    try:
        store = SnapshotStore(args.store)
        result = compare_snapshots(store.load(args.before), store.load(args.after))
    except StoreError as exc:
        raise _CliError(str(exc)) from exc
    if args.format == "json":
        sys.stdout.write(render_json(result))
        return EXIT_OK
    lines = [f"{result['before']} -> {result['after']}"]
    for name in ("avg_p_q", "s_a", "m_i"):
        entry = result["metrics"][name]
        lines.append(
            f"  {_METRIC_TITLES[name]}: {entry['before']:.6g} -> "
            f"{entry['after']:.6g} ({entry['delta']:+.6g})"
        )
    counts = result["metrics"]["class_count"], result["metrics"]["package_count"]
    lines.append(
        f"  classes: {counts[0]['before']:.0f} -> {counts[0]['after']:.0f}; "
        f"packages: {counts[1]['before']:.0f} -> {counts[1]['after']:.0f}"
    )
    packages = result["packages"]
    if packages["added"]:
        lines.append("  packages added: " + ", ".join(packages["added"]))
    if packages["removed"]:
        lines.append("  packages removed: " + ", ".join(packages["removed"]))
    moved = [p for p in packages["common"] if p["delta"] != 0.0]
    moved.sort(key=lambda p: (-abs(p["delta"]), p["package_name"]))
    for entry in moved[:5]:
        lines.append(
            f"  {entry['package_name']}: {entry['before']:.6g} -> "
            f"{entry['after']:.6g} ({entry['delta']:+.6g})"
        )
    print("\n".join(lines))
    return EXIT_OK


_RUNNERS = {"analyze": _run_analyze, "trend": _run_trend, "compare": _run_compare}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _RUNNERS[args.command](args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FATAL
    except SystemExit as exc:  # --help / --version
        code = exc.code
        return code if isinstance(code, int) else EXIT_FATAL
    except BrokenPipeError:
        return EXIT_FATAL
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return EXIT_FATAL
    except Exception as exc:  # last resort: report, never traceback
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FATAL


if __name__ == "__main__":
    sys.exit(main())
