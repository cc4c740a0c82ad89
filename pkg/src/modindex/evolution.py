"""Persistence of per-release analysis snapshots and trends across them.

A snapshot records the package qualities, the dependency matrix, and the
derived system scores for one labelled state of a codebase. Snapshots live
in a small file-based store so successive releases can be compared and
regressed over time.
"""

from __future__ import annotations

import json
import os
import statistics
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from filelock import FileLock

from .architecture import DependencyMatrix, SystemScore, architecture_score
from .quality import PackageQuality

METRICS = ("avg_p_q", "s_a", "m_i")

#: Slope magnitudes below this are reported as flat rather than a direction.
FLATNESS_EPSILON = 1e-4

_SCORE_TOLERANCE = 1e-12

_LABEL_ALPHABET = frozenset(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789._-"
)


class StoreError(Exception):
    """Base for snapshot store failures."""


class InvalidLabelError(StoreError):
    pass


class DuplicateLabelError(StoreError):
    pass


class UnknownLabelError(StoreError):
    pass


class StoreIntegrityError(StoreError):
    pass


class TrendError(StoreError):
    pass


def validate_label(label: str) -> str:
    """Labels name files, so they are restricted to a safe alphabet."""
    if (
        not label
        or label[0] in "._-"
        or not set(label) <= _LABEL_ALPHABET
    ):
        raise InvalidLabelError(
            f"invalid snapshot label {label!r}: use letters, digits, '.', '_' or '-', "
            "starting with a letter or digit"
        )
    return label


@dataclass(frozen=True, slots=True)
class Snapshot:
    """One labelled analysis result."""

    label: str
    created_at: str
    package_qualities: tuple[PackageQuality, ...]
    matrix: DependencyMatrix
    score: SystemScore

    @property
    def package_count(self) -> int:
        return len(self.package_qualities)

    @property
    def class_count(self) -> int:
        return sum(p.class_count for p in self.package_qualities)

    @property
    def avg_p_q(self) -> float:
        if not self.package_qualities:
            return 0.0
        return self.score.p_q_sum / len(self.package_qualities)

    def metric(self, name: str) -> float:
        if name == "avg_p_q":
            return self.avg_p_q
        if name == "s_a":
            return self.score.s_a
        if name == "m_i":
            return self.score.m_i
        raise TrendError(f"unknown metric {name!r}; expected one of {METRICS}")

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "created_at": self.created_at,
            "packages": [p.to_dict() for p in self.package_qualities],
            "matrix": self.matrix.to_dict(),
            "score": {
                "s_a": self.score.s_a,
                "p_q_sum": self.score.p_q_sum,
                "m_i": self.score.m_i,
                "vacuous_architecture": self.score.vacuous_architecture,
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> Snapshot:
        score = data["score"]
        return cls(
            label=data["label"],
            created_at=data["created_at"],
            package_qualities=tuple(
                PackageQuality.from_dict(p) for p in data["packages"]
            ),
            matrix=DependencyMatrix.from_dict(data["matrix"]),
            score=SystemScore(
                s_a=float(score["s_a"]),
                p_q_sum=float(score["p_q_sum"]),
                m_i=float(score["m_i"]),
                vacuous_architecture=bool(score["vacuous_architecture"]),
            ),
        )


def _verify_scores(snapshot: Snapshot, where: str) -> None:
    """Recompute the derived scores and require agreement with the stored ones."""
    s_a, _ = architecture_score(snapshot.matrix)
    p_q_sum = sum(p.p_q for p in snapshot.package_qualities)
    stored = snapshot.score
    drift = max(
        abs(s_a - stored.s_a),
        abs(p_q_sum - stored.p_q_sum),
        abs(s_a * p_q_sum - stored.m_i),
    )
    if drift > _SCORE_TOLERANCE:
        raise StoreIntegrityError(
            f"stored scores in {where} disagree with their inputs "
            f"(max drift {drift:.3e}); the store may be corrupt or hand-edited"
        )


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


class SnapshotStore:
    """Directory-backed snapshot collection.

    Layout: ``<root>/index`` holds the labels in insertion order;
    ``<root>/snapshots/<label>.snapshot`` holds each snapshot as JSON.
    Writers hold an advisory file lock so concurrent saves cannot corrupt
    the index.
    """

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self._snapshot_dir = self.root / "snapshots"
        self._index_path = self.root / "index"
        self._lock = FileLock(str(self.root / "lock"))

    # -- index ---------------------------------------------------------

    def labels(self) -> list[str]:
        """All stored labels, in insertion order."""
        if not self._index_path.exists():
            return []
        data = json.loads(self._index_path.read_text(encoding="utf-8"))
        return list(data["labels"])

    def _write_index(self, labels: list[str]) -> None:
        _atomic_write(self._index_path, json.dumps({"labels": labels}, indent=2) + "\n")

    # -- snapshots -----------------------------------------------------

    def _snapshot_path(self, label: str) -> Path:
        return self._snapshot_dir / f"{label}.snapshot"

    def save(self, snapshot: Snapshot, overwrite: bool = False) -> Path:
        validate_label(snapshot.label)
        _verify_scores(snapshot, f"snapshot {snapshot.label!r}")
        self.root.mkdir(parents=True, exist_ok=True)
        self._snapshot_dir.mkdir(exist_ok=True)
        with self._lock:
            labels = self.labels()
            if snapshot.label in labels and not overwrite:
                raise DuplicateLabelError(
                    f"snapshot {snapshot.label!r} already exists in {self.root}; "
                    "pass overwrite to replace it"
                )
            path = self._snapshot_path(snapshot.label)
            _atomic_write(path, json.dumps(snapshot.to_dict(), indent=2) + "\n")
            if snapshot.label not in labels:
                labels.append(snapshot.label)
                self._write_index(labels)
        return path

    def load(self, label: str) -> Snapshot:
        validate_label(label)
        path = self._snapshot_path(label)
        if not path.exists():
            known = ", ".join(self.labels()) or "none"
            raise UnknownLabelError(
                f"no snapshot {label!r} in {self.root} (stored: {known})"
            )
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
            snapshot = Snapshot.from_dict(data)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise StoreIntegrityError(f"cannot read snapshot file {path}: {exc}") from exc
        _verify_scores(snapshot, str(path))
        return snapshot

    def load_all(self) -> list[Snapshot]:
        return [self.load(label) for label in self.labels()]


def make_snapshot(
    label: str,
    package_qualities: list[PackageQuality],
    matrix: DependencyMatrix,
    score: SystemScore,
    created_at: str | None = None,
) -> Snapshot:
    validate_label(label)
    if created_at is None:
        created_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return Snapshot(
        label=label,
        created_at=created_at,
        package_qualities=tuple(package_qualities),
        matrix=matrix,
        score=score,
    )


# ---------------------------------------------------------------------------
# ordering and trends


def _version_key(label: str) -> tuple[int, ...] | None:
    """Dotted-numeric labels like ``0.9.21`` order numerically."""
    parts = label.split(".")
    if all(p.isdigit() for p in parts):
        return tuple(int(p) for p in parts)
    return None


def order_labels(labels: list[str]) -> tuple[list[str], str | None]:
    """Order snapshot labels as versions when possible.

    If every label is dotted-numeric they sort numerically; otherwise the
    store's insertion order is kept and a note says so.
    """
    keys = {label: _version_key(label) for label in labels}
    if labels and all(k is not None for k in keys.values()):
        return sorted(labels, key=lambda lb: keys[lb]), None
    if len(labels) > 1:
        return list(labels), (
            "labels are not all dotted-numeric versions; using insertion order"
        )
    return list(labels), None


@dataclass(frozen=True, slots=True)
class TrendReport:
    """Least-squares slope of one metric across ordered snapshots."""

    metric: str
    labels: tuple[str, ...]
    values: tuple[float, ...]
    slope: float
    direction: str
    ordering_note: str | None = None

    def to_dict(self) -> dict:
        return {
            "metric": self.metric,
            "labels": list(self.labels),
            "values": list(self.values),
            "slope": self.slope,
            "direction": self.direction,
            "ordering_note": self.ordering_note,
        }


def trend_from_series(
    metric: str,
    labels: list[str],
    values: list[float],
    ordering_note: str | None = None,
) -> TrendReport:
    """Fit values against their ordinal positions and classify the slope."""
    if len(values) < 2:
        raise TrendError(
            f"a trend needs at least two snapshots; the store holds {len(values)}"
        )
    slope, _intercept = statistics.linear_regression(range(len(values)), values)
    if slope > FLATNESS_EPSILON:
        direction = "improving"
    elif slope < -FLATNESS_EPSILON:
        direction = "declining"
    else:
        direction = "flat"
    return TrendReport(
        metric=metric,
        labels=tuple(labels),
        values=tuple(values),
        slope=slope,
        direction=direction,
        ordering_note=ordering_note,
    )


def compute_trend(store: SnapshotStore, metric: str) -> TrendReport:
    """Trend of one metric over every snapshot in the store."""
    if metric not in METRICS:
        raise TrendError(f"unknown metric {metric!r}; expected one of {METRICS}")
    ordered, note = order_labels(store.labels())
    snapshots = [store.load(label) for label in ordered]
    values = [s.metric(metric) for s in snapshots]
    return trend_from_series(metric, ordered, values, ordering_note=note)


# ---------------------------------------------------------------------------
# comparison


def compare_snapshots(before: Snapshot, after: Snapshot) -> dict:
    """Per-metric and per-package deltas between two snapshots."""
    metrics = {}
    for name in (*METRICS, "p_q_sum", "class_count", "package_count"):
        if name == "p_q_sum":
            a, b = before.score.p_q_sum, after.score.p_q_sum
        elif name == "class_count":
            a, b = float(before.class_count), float(after.class_count)
        elif name == "package_count":
            a, b = float(before.package_count), float(after.package_count)
        else:
            a, b = before.metric(name), after.metric(name)
        metrics[name] = {"before": a, "after": b, "delta": b - a}
    before_pkgs = {p.package_name: p for p in before.package_qualities}
    after_pkgs = {p.package_name: p for p in after.package_qualities}
    common = sorted(before_pkgs.keys() & after_pkgs.keys())
    return {
        "before": before.label,
        "after": after.label,
        "metrics": metrics,
        "packages": {
            "added": sorted(after_pkgs.keys() - before_pkgs.keys()),
            "removed": sorted(before_pkgs.keys() - after_pkgs.keys()),
            "common": [
                {
                    "package_name": name,
                    "before": before_pkgs[name].p_q,
                    "after": after_pkgs[name].p_q,
                    "delta": after_pkgs[name].p_q - before_pkgs[name].p_q,
                }
                for name in common
            ],
        },
    }
