"""Rendering of analysis results as JSON, CSV files, or a terminal summary.

All serialized numbers use Python's shortest round-trip float formatting,
so JSON and CSV carry bit-identical values. With the reproducible flag the
report omits its timestamp and two runs over the same tree are
byte-identical.
"""

from __future__ import annotations

import csv
import json
from datetime import datetime, timezone
from pathlib import Path

from . import TOOL_NAME, __version__
from .analysis import AnalysisReport

SCHEMA_VERSION = 1

CLASS_COLUMNS = (
    "qualified_name",
    "package_name",
    "kind",
    "source_path",
    "ncloc",
    "functions",
    "lcom4",
    "max_method_complexity",
    "total_complexity",
    "statements",
    "loc_q",
    "f_q",
    "c_q",
)

PACKAGE_COLUMNS = ("package_name", "class_count", "p_q")

SUMMARY_COLUMNS = (
    "root",
    "edge_weight",
    "class_count",
    "package_count",
    "avg_p_q",
    "p_q_sum",
    "s_a",
    "m_i",
    "vacuous_architecture",
)

DIAGNOSTIC_COLUMNS = ("path", "line", "message")


def _class_dict(row) -> dict:
    data = row.metrics.to_dict()
    data["source_path"] = row.source_path
    data["loc_q"] = row.quality.loc_q
    data["f_q"] = row.quality.f_q
    data["c_q"] = row.quality.c_q
    return data


def report_to_dict(report: AnalysisReport, reproducible: bool = False) -> dict:
    """The full report as one JSON-ready dictionary."""
    data: dict = {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": TOOL_NAME, "version": __version__},
        "root": report.root,
        "edge_weight": report.edge_weight,
    }
    if not reproducible:
        data["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    data["summary"] = {
        "class_count": report.class_count,
        "package_count": report.package_count,
        "avg_p_q": report.avg_p_q,
        "p_q_sum": report.score.p_q_sum,
        "s_a": report.score.s_a,
        "m_i": report.score.m_i,
        "vacuous_architecture": report.score.vacuous_architecture,
    }
    data["classes"] = [_class_dict(row) for row in report.classes]
    data["packages"] = [p.to_dict() for p in report.package_qualities]
    data["matrix"] = report.matrix.to_dict()
    data["diagnostics"] = [
        {"path": d.path, "line": d.line, "message": d.message} for d in report.diagnostics
    ]
    return data


def render_json(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv_files(report: AnalysisReport, out_dir: str | Path) -> list[Path]:
    """Write classes/packages/matrix/summary/diagnostics CSVs into a directory."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def emit(name: str, header: tuple[str, ...], rows: list[list]) -> None:
        path = out / name
        with path.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(header)
            for row in rows:
                writer.writerow([_cell(v) for v in row])
        written.append(path)

    emit(
        "classes.csv",
        CLASS_COLUMNS,
        [[_class_dict(r)[c] for c in CLASS_COLUMNS] for r in report.classes],
    )
    emit(
        "packages.csv",
        PACKAGE_COLUMNS,
        [[p.package_name, p.class_count, p.p_q] for p in report.package_qualities],
    )
    emit(
        "matrix.csv",
        ("package", *report.matrix.packages),
        [
            [pkg, *row]
            for pkg, row in zip(report.matrix.packages, report.matrix.counts)
        ],
    )
    summary = report_to_dict(report, reproducible=True)["summary"]
    emit(
        "summary.csv",
        SUMMARY_COLUMNS,
        [[
            report.root,
            report.edge_weight,
            summary["class_count"],
            summary["package_count"],
            summary["avg_p_q"],
            summary["p_q_sum"],
            summary["s_a"],
            summary["m_i"],
            summary["vacuous_architecture"],
        ]],
    )
    emit(
        "diagnostics.csv",
        DIAGNOSTIC_COLUMNS,
        [[d.path, d.line, d.message] for d in report.diagnostics],
    )
    return written


def human_summary(report: AnalysisReport) -> str:
    """A short terminal summary of the analysis."""
    vacuous = " (vacuous: no dependencies recorded)" if report.score.vacuous_architecture else ""
    lines = [
        f"{TOOL_NAME} {__version__} — {report.root}",
        f"  classes analyzed:        {report.class_count} in {report.package_count} packages",
        f"  average package quality: {report.avg_p_q:.6g}",
        f"  architecture score:      {report.score.s_a:.6g}{vacuous}",
        f"  modularity index:        {report.score.m_i:.6g}",
    ]
    if report.diagnostics:
        lines.append(f"  diagnostics:             {len(report.diagnostics)} (included in report)")
    return "\n".join(lines)
