"""Normalized quality scores for classes and packages.

Size and function-count scores map raw measurements onto [0, 1] with a peak
at an empirically motivated sweet spot — around 50 effective lines and five
functions per class — rising linearly below the peak and decaying by a
power law above it. The class score averages the two and divides by the
cohesion component count, so fragmented classes are penalized
proportionally. A package scores the mean of its classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .class_metrics import ClassMetrics

_SIZE_PEAK = 50
_SIZE_SLOPE = 0.0125
_SIZE_INTERCEPT = 0.375
_SIZE_DECAY = -2.046

_FUNCTIONS_PEAK = 5
_FUNCTIONS_SLOPE = 0.172
_FUNCTIONS_INTERCEPT = 0.171
_FUNCTIONS_SHIFT = 4.83
_FUNCTIONS_DECAY = -2.739


def _clamp(value: float) -> float:
    return min(1.0, max(0.0, value))


def size_quality(ncloc: int) -> float:
    """Score in [0, 1] for a class's effective line count; peaks at 50."""
    if ncloc <= _SIZE_PEAK:
        return _clamp(_SIZE_SLOPE * ncloc + _SIZE_INTERCEPT)
    return _clamp((ncloc - _SIZE_PEAK) ** _SIZE_DECAY)


def function_count_quality(functions: int) -> float:
    """Score in [0, 1] for a class's function count; peaks near 5."""
    if functions <= _FUNCTIONS_PEAK:
        return _clamp(_FUNCTIONS_SLOPE * functions + _FUNCTIONS_INTERCEPT)
    return _clamp((functions - _FUNCTIONS_SHIFT) ** _FUNCTIONS_DECAY)


def class_quality(size_q: float, function_q: float, lcom4: int) -> float:
    """Average of the two scores, divided by the cohesion component count.

    A component count below one (a class with no methods) is treated as
    one: such classes are not penalized, only capped by their size score.
    """
    return (size_q + function_q) / (2 * max(lcom4, 1))


@dataclass(frozen=True, slots=True)
class ClassQuality:
    """Quality scores for one class."""

    loc_q: float
    f_q: float
    c_q: float


def score_class(metrics: ClassMetrics) -> ClassQuality:
    loc_q = size_quality(metrics.ncloc)
    f_q = function_count_quality(metrics.functions)
    return ClassQuality(loc_q=loc_q, f_q=f_q, c_q=class_quality(loc_q, f_q, metrics.lcom4))


@dataclass(frozen=True, slots=True)
class PackageQuality:
    """Mean class quality over one package."""

    package_name: str
    class_count: int
    p_q: float

    def to_dict(self) -> dict:
        return {
            "package_name": self.package_name,
            "class_count": self.class_count,
            "p_q": self.p_q,
        }

    @classmethod
    def from_dict(cls, data: dict) -> PackageQuality:
        return cls(
            package_name=data["package_name"],
            class_count=int(data["class_count"]),
            p_q=float(data["p_q"]),
        )


def package_quality(package_name: str, class_scores: list[float]) -> PackageQuality:
    """Mean of the class scores; a package with no classes scores zero."""
    count = len(class_scores)
    mean = sum(class_scores) / count if count else 0.0
    return PackageQuality(package_name=package_name, class_count=count, p_q=mean)
