"""End-to-end analysis of a Java source tree.

Runs the front end over the tree, measures every declared type, scores
packages, builds the dependency matrix, and derives the system scores.
All output collections are deterministically ordered so repeated runs over
the same tree produce identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .architecture import (
    DependencyMatrix,
    EDGE_WEIGHT_PAIRS,
    SystemScore,
    build_matrix,
    score_system,
)
from .class_metrics import ClassMetrics, measure_class
from .evolution import Snapshot, make_snapshot
from .javafront.model import Diagnostic, SourceFile
from .javafront.references import build_universe
from .javafront.scanner import parse_tree
from .quality import ClassQuality, PackageQuality, package_quality, score_class


class NoJavaSourcesError(Exception):
    """Raised when the analyzed directory contains nothing to measure."""


@dataclass(frozen=True, slots=True)
class ClassRow:
    """One analyzed class: raw measurements plus quality scores."""

    metrics: ClassMetrics
    quality: ClassQuality
    source_path: str


@dataclass(slots=True)
class AnalysisReport:
    """Complete result of analyzing one source tree."""

    root: str
    edge_weight: str
    classes: list[ClassRow]
    package_qualities: list[PackageQuality]
    matrix: DependencyMatrix
    score: SystemScore
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def package_count(self) -> int:
        return len(self.package_qualities)

    @property
    def avg_p_q(self) -> float:
        if not self.package_qualities:
            return 0.0
        return self.score.p_q_sum / len(self.package_qualities)


def analyze_files(
    files: list[SourceFile], root: str, edge_weight: str = EDGE_WEIGHT_PAIRS
) -> AnalysisReport:
    """Analyze already-parsed sources; the core of :func:`analyze_tree`."""
    diagnostics = [d for sf in files for d in sf.diagnostics]
    universe = build_universe(files, diagnostics)

    paths = universe.source_paths
    rows = [
        ClassRow(
            metrics=(m := measure_class(decl)),
            quality=score_class(m),
            source_path=paths[decl.qualified_name],
        )
        for decl in universe.by_qualified.values()
    ]
    rows.sort(key=lambda r: r.metrics.qualified_name)

    # Packages exist if they declare a measured class or a source file names
    # them; the latter keeps genuinely empty packages in the matrix.
    extra_packages = {sf.package_name for sf in files if sf.package_name}
    matrix = build_matrix(
        list(universe.by_qualified.values()),
        universe,
        edge_weight=edge_weight,
        extra_packages=extra_packages,
        diagnostics=diagnostics,
    )

    scores_by_package: dict[str, list[float]] = {name: [] for name in matrix.packages}
    for row in rows:
        scores_by_package[row.metrics.package_name].append(row.quality.c_q)
    package_qualities = [
        package_quality(name, scores_by_package[name]) for name in matrix.packages
    ]

    diagnostics.sort(key=lambda d: (d.path, d.line, d.message))
    return AnalysisReport(
        root=root,
        edge_weight=edge_weight,
        classes=rows,
        package_qualities=package_qualities,
        matrix=matrix,
        score=score_system(matrix, package_qualities),
        diagnostics=diagnostics,
    )


def analyze_tree(
    root: str | Path, edge_weight: str = EDGE_WEIGHT_PAIRS, jobs: int = 1
) -> AnalysisReport:
    """Parse and score every Java file under ``root``."""
    root_path = Path(root)
    if not root_path.is_dir():
        raise NoJavaSourcesError(f"no Java sources: {root} is not a directory")
    files = parse_tree(root_path, jobs=jobs)
    if not files:
        raise NoJavaSourcesError(f"no Java sources found under {root}")
    return analyze_files(files, root=str(root), edge_weight=edge_weight)


def snapshot_from_report(
    report: AnalysisReport, label: str, created_at: str | None = None
) -> Snapshot:
    """Package an analysis result for the snapshot store."""
    return make_snapshot(
        label=label,
        package_qualities=report.package_qualities,
        matrix=report.matrix,
        score=report.score,
        created_at=created_at,
    )
