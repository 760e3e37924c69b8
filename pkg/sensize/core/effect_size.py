"""
Effect-size metrics, Cohen's conventional values and conversions from test
statistics.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from sensize.core.errors import DomainError


class Metric(str, Enum):
    """Standardized effect-size metrics."""

    R = "r"
    D = "d"
    W = "w"
    V = "V"
    F = "f"


class BenchmarkSize(str, Enum):
    """Cohen's conventional effect-size labels."""

    SMALL = "small"
    MEDIUM = "medium"
    LARGE = "large"


@dataclass(frozen=True)
class EffectSize:
    """
    A nonnegative effect-size magnitude tagged with its metric.

    Cramér's V carries ``dfs``, the smaller table dimension minus one.
    """

    metric: Metric
    value: float
    dfs: Optional[int] = None

    def __post_init__(self) -> None:
        if math.isnan(self.value) or math.isinf(self.value):
            raise DomainError(f"Effect size must be finite, got {self.value}")
        if self.value < 0:
            raise DomainError(f"Effect size must be >= 0, got {self.value}")
        if self.metric is Metric.R and self.value > 1:
            raise DomainError(f"r must be <= 1, got {self.value}")
        if self.metric is Metric.V:
            if self.dfs is None or self.dfs < 1:
                raise DomainError("V requires dfs >= 1")
        elif self.dfs is not None:
            raise DomainError(f"Metric {self.metric.value} takes no dfs")

    @property
    def label(self) -> str:
        """Metric label as printed in tables, e.g. ``V(2)``."""
        if self.metric is Metric.V:
            return f"V({self.dfs})"
        return self.metric.value

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"metric": self.metric.value, "value": self.value}
        if self.dfs is not None:
            data["dfs"] = self.dfs
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "EffectSize":
        return cls(Metric(data["metric"]), float(data["value"]), data.get("dfs"))

    @classmethod
    def parse(cls, text: str) -> "EffectSize":
        """
        Parse ``metric=value`` text such as ``d=0.5`` or ``V(2)=0.212``.

        Raises:
            ValueError: If the text is not of that form
        """
        name, sep, raw_value = text.partition("=")
        if not sep:
            raise ValueError(f"Expected metric=value, got {text!r}")
        name = name.strip()
        dfs: Optional[int] = None
        if name.startswith("V(") and name.endswith(")"):
            dfs = int(name[2:-1])
            name = "V"
        try:
            metric = Metric(name)
        except ValueError:
            known = ", ".join(m.value for m in Metric)
            raise ValueError(f"Unknown metric {name!r} (expected one of {known})") from None
        return cls(metric, float(raw_value), dfs)

    def __str__(self) -> str:
        return f"{self.label}={self.value:g}"


@dataclass(frozen=True)
class CohenBenchmarks:
    """Cohen's small, medium and large values for one metric."""

    metric: Metric
    small: float
    medium: float
    large: float

    def __post_init__(self) -> None:
        if not (self.small < self.medium < self.large):
            raise DomainError("Benchmarks must satisfy small < medium < large")

    def value(self, size: BenchmarkSize) -> float:
        return {
            BenchmarkSize.SMALL: self.small,
            BenchmarkSize.MEDIUM: self.medium,
            BenchmarkSize.LARGE: self.large,
        }[size]


COHEN_BENCHMARKS: Dict[Metric, CohenBenchmarks] = {
    Metric.R: CohenBenchmarks(Metric.R, 0.10, 0.30, 0.50),
    Metric.D: CohenBenchmarks(Metric.D, 0.20, 0.50, 0.80),
    Metric.W: CohenBenchmarks(Metric.W, 0.10, 0.30, 0.50),
    Metric.F: CohenBenchmarks(Metric.F, 0.10, 0.25, 0.40),
}


def benchmark(metric: Metric, size: BenchmarkSize) -> EffectSize:
    """Cohen's conventional effect size for a metric (V is not tabulated)."""
    if metric not in COHEN_BENCHMARKS:
        raise DomainError(f"No conventional values for metric {metric.value}")
    return EffectSize(metric, COHEN_BENCHMARKS[metric].value(size))


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        raise DomainError(f"{name} must be >= 1, got {value}")


def d_from_t(t: float, df: int) -> EffectSize:
    """Cohen's d from an independent-groups t: d = 2t / sqrt(df)."""
    _require_positive("df", df)
    return EffectSize(Metric.D, abs(2.0 * t / math.sqrt(df)))


def r_from_t(t: float, df: int) -> EffectSize:
    """Point-biserial r from t: r = |t| / sqrt(t^2 + df)."""
    _require_positive("df", df)
    return EffectSize(Metric.R, abs(t) / math.sqrt(t * t + df))


def w_from_chi2(chi2: float, n: int, cells: Optional[int] = None) -> EffectSize:
    """
    Cohen's w from a goodness-of-fit chi-square: w = sqrt(chi2 / N).

    Args:
        chi2: Chi-square statistic, >= 0
        n: Total sample size
        cells: Number of cells when known; with two cells w cannot exceed 1

    Raises:
        DomainError: If n < 1, chi2 < 0, or w > 1 in a two-cell table
    """
    _require_positive("n", n)
    if chi2 < 0:
        raise DomainError(f"chi2 must be >= 0, got {chi2}")
    w = math.sqrt(chi2 / n)
    if cells == 2 and w > 1.0 + 1e-12:
        raise DomainError(f"w = {w:.4f} exceeds 1 for a two-cell table")
    return EffectSize(Metric.W, min(w, 1.0) if cells == 2 else w)


def v_from_chi2(chi2: float, n: int, dfs: int) -> EffectSize:
    """Cramér's V: V = sqrt(chi2 / (N * dfs)), so that w = V * sqrt(dfs)."""
    _require_positive("n", n)
    _require_positive("dfs", dfs)
    if chi2 < 0:
        raise DomainError(f"chi2 must be >= 0, got {chi2}")
    return EffectSize(Metric.V, math.sqrt(chi2 / (n * dfs)), dfs)


def f_from_F(F: float, dfn: int, dfd: int) -> EffectSize:  # noqa: N802,N803
    """Cohen's f from a one-way ANOVA F: f = sqrt(dfn * F / dfd)."""
    _require_positive("dfn", dfn)
    _require_positive("dfd", dfd)
    if F < 0:
        raise DomainError(f"F must be >= 0, got {F}")
    return EffectSize(Metric.F, math.sqrt(dfn * F / dfd))


def d_from_r(r: float) -> float:
    """Equivalent two-group d for a point-biserial r: d = 2r / sqrt(1 - r^2)."""
    if not (0 <= r < 1):
        raise DomainError(f"r must be in [0, 1), got {r}")
    return 2.0 * r / math.sqrt(1.0 - r * r)
