"""
Pairwise chi-square goodness-of-fit comparisons of capture counts between
sampling conditions.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from sensize.core.distributions import DistributionParams, sf
from sensize.core.effect_size import w_from_chi2
from sensize.core.errors import DegenerateDataError, DomainError
from sensize.core.simulation import StudyOutcome
from sensize.utils import to_roman

logger = logging.getLogger(__name__)

ALL_STUDIES = "All studies"


@dataclass(frozen=True)
class PairwiseComparison:
    """Two-cell equal-expectation chi-square between two capture counts."""

    label: str
    f1: int
    f2: int
    chi2: float
    w: float
    p: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "f1": self.f1,
            "f2": self.f2,
            "chi2": self.chi2,
            "w": self.w,
            "p": self.p,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PairwiseComparison":
        return cls(
            label=data["label"],
            f1=int(data["f1"]),
            f2=int(data["f2"]),
            chi2=float(data["chi2"]),
            w=float(data["w"]),
            p=float(data["p"]),
        )


def pairwise_gof(f1: int, f2: int, label: str = "") -> PairwiseComparison:
    """
    Goodness-of-fit chi-square of two counts against equal expected counts,
    without continuity correction.

    Args:
        f1: First count
        f2: Second count
        label: Name of the comparison, e.g. ``PWR-SNS``

    Returns:
        PairwiseComparison with chi2 = (f1 - f2)^2 / (f1 + f2),
        w = sqrt(chi2 / (f1 + f2)) and p from the chi-square(1) upper tail

    Raises:
        DomainError: If a count is negative
        DegenerateDataError: If both counts are zero
    """
    if f1 < 0 or f2 < 0:
        raise DomainError(f"Counts must be >= 0, got {f1} and {f2}")
    total = f1 + f2
    if total == 0:
        raise DegenerateDataError("Cannot compare two zero counts")
    chi2 = (f1 - f2) ** 2 / total
    w = w_from_chi2(chi2, total, cells=2).value
    p = sf(DistributionParams.chi2(1), chi2)
    return PairwiseComparison(label=label, f1=f1, f2=f2, chi2=chi2, w=w, p=p)


def condition_shares(counts: Mapping[str, int]) -> Dict[str, float]:
    """
    Each condition's share of all captures, in percent.

    Raises:
        DegenerateDataError: If every count is zero
    """
    total = sum(counts.values())
    if total <= 0:
        raise DegenerateDataError("No captures to share out")
    return {name: 100.0 * f / total for name, f in counts.items()}


def condition_pairs(conditions: Sequence[str]) -> List[Tuple[str, str]]:
    """Cyclic neighbour pairs: A-B, B-C, C-A for three conditions."""
    if len(conditions) < 2:
        return []
    if len(conditions) == 2:
        return [(conditions[0], conditions[1])]
    return [(c, conditions[(i + 1) % len(conditions)]) for i, c in enumerate(conditions)]


@dataclass
class StudySummary:
    """Captures, shares and pairwise comparisons for a study or for all studies."""

    column: str
    counts: Dict[str, int]
    shares: Dict[str, float] = field(default_factory=dict)
    comparisons: List[PairwiseComparison] = field(default_factory=list)

    def comparison(self, label: str) -> Optional[PairwiseComparison]:
        for c in self.comparisons:
            if c.label == label:
                return c
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "column": self.column,
            "counts": dict(self.counts),
            "shares": dict(self.shares),
            "comparisons": [c.to_dict() for c in self.comparisons],
        }


def summarize_counts(column: str, counts: Mapping[str, int]) -> StudySummary:
    """Shares and pairwise comparisons for one set of capture counts."""
    summary = StudySummary(column=column, counts=dict(counts))
    if sum(counts.values()) == 0:
        logger.warning("%s: no captures, shares and comparisons skipped", column)
        return summary
    summary.shares = condition_shares(counts)
    for a, b in condition_pairs(list(counts)):
        if counts[a] + counts[b] == 0:
            continue
        summary.comparisons.append(pairwise_gof(counts[a], counts[b], f"{a}-{b}"))
    return summary


def _total_counts(outcomes: Sequence[StudyOutcome]) -> Dict[str, int]:
    totals: Dict[str, int] = {}
    for outcome in outcomes:
        for name, f in outcome.counts.items():
            totals[name] = totals.get(name, 0) + f
    return totals


def summarize_totals(outcomes: Sequence[StudyOutcome]) -> StudySummary:
    """Accumulated captures over all studies (overall results layout)."""
    if not outcomes:
        raise DegenerateDataError("No study outcomes to summarize")
    return summarize_counts(ALL_STUDIES, _total_counts(outcomes))


def summarize_studies(outcomes: Sequence[StudyOutcome]) -> List[StudySummary]:
    """One summary per study, headed I, II, ..., followed by the all-studies column."""
    summaries = [
        summarize_counts(to_roman(outcome.study_index + 1), outcome.counts)
        for outcome in outcomes
    ]
    summaries.append(summarize_totals(outcomes))
    return summaries


def study_table_records(summaries: Sequence[StudySummary]) -> List[Dict[str, Any]]:
    """
    Per-study layout: one row per statistic (f, %, chi2 and w per pair) and
    one column per study. Missing cells are None.
    """
    if not summaries:
        return []
    columns = [s.column for s in summaries]
    conditions = list(summaries[-1].counts)
    records: List[Dict[str, Any]] = []

    def row(statistic: str, values: List[Any]) -> None:
        record: Dict[str, Any] = {"statistic": statistic}
        record.update(zip(columns, values))
        records.append(record)

    for name in conditions:
        row(f"f {name}", [s.counts.get(name) for s in summaries])
    for name in conditions:
        row(f"% {name}", [s.shares.get(name) for s in summaries])
    for a, b in condition_pairs(conditions):
        label = f"{a}-{b}"
        found = [s.comparison(label) for s in summaries]
        row(f"chi2 {label}", [c.chi2 if c else None for c in found])
        row(f"w {label}", [c.w if c else None for c in found])
    return records


def totals_table_records(summary: StudySummary) -> List[Dict[str, Any]]:
    """Overall layout: condition, sum of f, %, and the pair comparison on the same row."""
    records = []
    comparisons = list(summary.comparisons)
    for i, name in enumerate(summary.counts):
        record: Dict[str, Any] = {
            "condition": name,
            "sum_f": summary.counts[name],
            "percent": summary.shares.get(name),
        }
        if i < len(comparisons):
            c = comparisons[i]
            record.update({"pair": c.label, "w": c.w, "chi2": c.chi2, "p": c.p})
        else:
            record.update({"pair": None, "w": None, "chi2": None, "p": None})
        records.append(record)
    return records


def descriptives_records(outcomes: Sequence[StudyOutcome]) -> List[Dict[str, Any]]:
    """
    Per-study macro-population descriptives with research N and the
    percentage of significant tests per condition.
    """
    columns = [to_roman(o.study_index + 1) for o in outcomes]
    rows: List[Tuple[str, List[Any]]] = [
        ("N 1", [o.macro_descriptives.group1.n for o in outcomes]),
        ("Mean 1", [o.macro_descriptives.group1.mean for o in outcomes]),
        ("SD 1", [o.macro_descriptives.group1.sd for o in outcomes]),
        ("N 2", [o.macro_descriptives.group2.n for o in outcomes]),
        ("Mean 2", [o.macro_descriptives.group2.mean for o in outcomes]),
        ("SD 2", [o.macro_descriptives.group2.sd for o in outcomes]),
        ("d", [o.macro_descriptives.d for o in outcomes]),
        ("Research N", [o.research_n for o in outcomes]),
    ]
    conditions = list(outcomes[0].sig_any) if outcomes else []
    for name in conditions:
        rows.append((f"{name}, % sig", [o.sig_percent(name) for o in outcomes]))

    records = []
    for statistic, values in rows:
        record: Dict[str, Any] = {"statistic": statistic}
        record.update(zip(columns, values))
        records.append(record)
    return records
