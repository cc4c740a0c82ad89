"""Package dependency matrix and system-level modularity scores.

The dependency matrix counts class-level references aggregated to package
granularity, including each package's internal references on the diagonal.
The architecture score is the square root of the diagonal's share of the
total squared mass, so it rewards systems whose coupling stays inside
package boundaries; combined with the summed package qualities it yields
the system modularity index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .javafront.model import Diagnostic, TypeDecl
from .javafront.references import Universe, resolve_reference_weights
from .quality import PackageQuality

EDGE_WEIGHT_PAIRS = "pairs"
EDGE_WEIGHT_OCCURRENCES = "occurrences"
EDGE_WEIGHTS = (EDGE_WEIGHT_PAIRS, EDGE_WEIGHT_OCCURRENCES)


@dataclass(frozen=True, slots=True)
class DependencyMatrix:
    """Square matrix of reference counts between packages.

    Rows are referencing packages, columns referenced packages, both in
    the same lexicographic order given by ``packages``.
    """

    packages: tuple[str, ...]
    counts: tuple[tuple[int, ...], ...]

    def dependency_total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def to_dict(self) -> dict:
        return {
            "packages": list(self.packages),
            "counts": [list(row) for row in self.counts],
        }

    @classmethod
    def from_dict(cls, data: dict) -> DependencyMatrix:
        return cls(
            packages=tuple(data["packages"]),
            counts=tuple(tuple(int(c) for c in row) for row in data["counts"]),
        )


def build_matrix(
    decls: list[TypeDecl],
    universe: Universe,
    edge_weight: str = EDGE_WEIGHT_PAIRS,
    extra_packages: set[str] | None = None,
    diagnostics: list[Diagnostic] | None = None,
) -> DependencyMatrix:
    """Aggregate class references into a package dependency matrix.

    With ``pairs`` weighting each distinct (referencing class, referenced
    class) pair contributes one; with ``occurrences`` every appearance of
    the referenced name contributes. ``extra_packages`` adds rows/columns
    for packages that declare no measured classes so they still shape the
    matrix.
    """
    if edge_weight not in EDGE_WEIGHTS:
        raise ValueError(f"unknown edge weight {edge_weight!r}; expected one of {EDGE_WEIGHTS}")
    if diagnostics is None:
        diagnostics = []
    names = {d.package_name for d in decls}
    if extra_packages:
        names.update(extra_packages)
    packages = tuple(sorted(names))
    index = {p: i for i, p in enumerate(packages)}
    counts = [[0] * len(packages) for _ in packages]
    for decl in decls:
        row = index[decl.package_name]
        weights = resolve_reference_weights(decl, universe, diagnostics)
        for target, occurrences in weights.items():
            target_decl = universe.by_qualified[target]
            col = index.get(target_decl.package_name)
            if col is None:
                continue
            counts[row][col] += occurrences if edge_weight == EDGE_WEIGHT_OCCURRENCES else 1
    return DependencyMatrix(packages=packages, counts=tuple(tuple(r) for r in counts))


def architecture_score(matrix: DependencyMatrix) -> tuple[float, bool]:
    """Diagonal share of the squared dependency mass, as a root.

    Returns ``(score, vacuous)``. A system with no recorded dependencies at
    all has nothing to violate package boundaries; it scores a vacuous 1.0.
    Sums are taken over exact integers so the score is invariant under any
    reordering of the packages.
    """
    diagonal_sq = 0
    total_sq = 0
    for i, row in enumerate(matrix.counts):
        for j, count in enumerate(row):
            sq = count * count
            total_sq += sq
            if i == j:
                diagonal_sq += sq
    if total_sq == 0:
        return 1.0, True
    return math.sqrt(diagonal_sq / total_sq), False


@dataclass(frozen=True, slots=True)
class SystemScore:
    """Architecture score, summed package quality, and their product."""

    s_a: float
    p_q_sum: float
    m_i: float
    vacuous_architecture: bool = False


def modularity_index(s_a: float, package_qualities: list[PackageQuality]) -> float:
    """Architecture score times the sum of package qualities.

    The sum (not the mean) keeps the index sensitive to system size: an
    architecture split into more well-shaped packages scores higher, with
    no fixed upper bound.
    """
    return s_a * sum(p.p_q for p in package_qualities)


def score_system(
    matrix: DependencyMatrix, package_qualities: list[PackageQuality]
) -> SystemScore:
    s_a, vacuous = architecture_score(matrix)
    p_q_sum = sum(p.p_q for p in package_qualities)
    return SystemScore(
        s_a=s_a,
        p_q_sum=p_q_sum,
        m_i=s_a * p_q_sum,
        vacuous_architecture=vacuous,
    )
