"""
Seeded Monte Carlo comparison of sampling strategies.

Macro-populations are generated once per run. Each study extracts fresh
research populations from one macro-population (sampling without
replacement), draws one equal-split sample per condition from every
research population, runs a one-tailed pooled-variance t test and counts a
capture when the test is significant and the sample d exceeds the threshold.

Every random draw comes from its own numpy ``SeedSequence`` substream keyed
by (kind, study, population, condition), so results do not depend on the
number of workers or the order in which studies run.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from sensize.core.config import SimulationConfig
from sensize.core.distributions import DistributionParams, sf
from sensize.core.errors import ConfigError, DegenerateDataError, DomainError
from sensize.core.validator import SimulationConfigValidator

logger = logging.getLogger(__name__)

Groups = Tuple[np.ndarray, np.ndarray]

_MACRO_STREAM = 0
_POPULATION_STREAM = 1
_SAMPLE_STREAM = 2


@dataclass(frozen=True)
class TTestResult:
    """Pooled-variance two-sample t test, one-tailed in the direction B > A."""

    t: float
    df: int
    p_one_tailed: float
    d: float


def two_sample_t(group_a: Sequence[float], group_b: Sequence[float]) -> TTestResult:
    """
    Pooled-variance t test with df = nA + nB - 2 and d = 2t / sqrt(df).

    Raises:
        DomainError: If either group has fewer than 2 observations
        DegenerateDataError: If the pooled variance is zero
    """
    a = np.asarray(group_a, dtype=float)
    b = np.asarray(group_b, dtype=float)
    if a.size < 2 or b.size < 2:
        raise DomainError(f"Each group needs >= 2 observations, got {a.size} and {b.size}")
    df = a.size + b.size - 2
    mean_a, mean_b = float(a.mean()), float(b.mean())
    pooled_var = (float(((a - mean_a) ** 2).sum()) + float(((b - mean_b) ** 2).sum())) / df
    scale = max(1.0, mean_a * mean_a, mean_b * mean_b)
    if pooled_var <= np.finfo(float).eps * scale:
        raise DegenerateDataError("Pooled variance is zero")
    t = (mean_b - mean_a) / math.sqrt(pooled_var * (1.0 / a.size + 1.0 / b.size))
    p = sf(DistributionParams.t(df), t)
    return TTestResult(t=t, df=df, p_one_tailed=p, d=2.0 * t / math.sqrt(df))


@dataclass(frozen=True)
class GroupDescriptives:
    n: int
    mean: float
    sd: float

    @classmethod
    def of(cls, values: np.ndarray) -> "GroupDescriptives":
        return cls(n=int(values.size), mean=float(values.mean()), sd=float(values.std(ddof=1)))

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "mean": self.mean, "sd": self.sd}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GroupDescriptives":
        return cls(n=int(data["n"]), mean=float(data["mean"]), sd=float(data["sd"]))


@dataclass(frozen=True)
class PopulationDescriptives:
    """Group sizes, means and SDs of a population, with d on the pooled SD."""

    group1: GroupDescriptives
    group2: GroupDescriptives
    d: float

    @classmethod
    def of(cls, groups: Groups) -> "PopulationDescriptives":
        g1, g2 = GroupDescriptives.of(groups[0]), GroupDescriptives.of(groups[1])
        pooled = math.sqrt(
            ((g1.n - 1) * g1.sd**2 + (g2.n - 1) * g2.sd**2) / (g1.n + g2.n - 2)
        )
        return cls(group1=g1, group2=g2, d=(g2.mean - g1.mean) / pooled)

    def to_dict(self) -> Dict[str, Any]:
        return {"group1": self.group1.to_dict(), "group2": self.group2.to_dict(), "d": self.d}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PopulationDescriptives":
        return cls(
            group1=GroupDescriptives.from_dict(data["group1"]),
            group2=GroupDescriptives.from_dict(data["group2"]),
            d=float(data["d"]),
        )


@dataclass(frozen=True)
class SampleOutcome:
    """One condition sample: its t test and whether it counts."""

    test: TTestResult
    significant: bool
    captured: bool


@dataclass(frozen=True)
class StudyOutcome:
    """
    Counts for one study.

    ``counts`` holds captures (significant and d above the threshold) and
    ``sig_any`` significant tests regardless of effect size, per condition.
    """

    study_index: int
    research_n: int
    pops: int
    counts: Dict[str, int]
    sig_any: Dict[str, int]
    macro_descriptives: PopulationDescriptives
    population_descriptives: List[PopulationDescriptives]

    def __post_init__(self) -> None:
        if self.pops < 1:
            raise ValueError(f"Study {self.study_index}: pops must be >= 1, got {self.pops}")
        if set(self.counts) != set(self.sig_any):
            raise ValueError(
                f"Study {self.study_index}: counts cover {sorted(self.counts)} but "
                f"sig_any covers {sorted(self.sig_any)}"
            )
        for name, f in self.counts.items():
            if not (0 <= f <= self.sig_any[name] <= self.pops):
                raise ValueError(
                    f"Condition {name}: need 0 <= captures ({f}) <= significant "
                    f"({self.sig_any[name]}) <= populations ({self.pops})"
                )

    def sig_percent(self, condition: str) -> float:
        """Percentage of significant tests irrespective of effect size."""
        return 100.0 * self.sig_any[condition] / self.pops

    def to_dict(self) -> Dict[str, Any]:
        return {
            "study_index": self.study_index,
            "research_n": self.research_n,
            "pops": self.pops,
            "counts": dict(self.counts),
            "sig_any": dict(self.sig_any),
            "macro_descriptives": self.macro_descriptives.to_dict(),
            "population_descriptives": [p.to_dict() for p in self.population_descriptives],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "StudyOutcome":
        """
        Rebuild an outcome from to_dict output.

        Raises:
            ValueError: If a field is missing, mistyped or breaks the count invariant
        """
        try:
            return cls(
                study_index=int(data["study_index"]),
                research_n=int(data["research_n"]),
                pops=int(data["pops"]),
                counts={str(k): int(v) for k, v in data["counts"].items()},
                sig_any={str(k): int(v) for k, v in data["sig_any"].items()},
                macro_descriptives=PopulationDescriptives.from_dict(data["macro_descriptives"]),
                population_descriptives=[
                    PopulationDescriptives.from_dict(p) for p in data["population_descriptives"]
                ],
            )
        except (KeyError, TypeError, AttributeError) as e:
            raise ValueError(f"Malformed study outcome: missing or invalid {e}") from e


def substream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator for one (kind, study, population, condition) key."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))


def _extract(groups: Groups, per_group: int, rng: np.random.Generator) -> Groups:
    first = rng.choice(groups[0], size=per_group, replace=False)
    second = rng.choice(groups[1], size=per_group, replace=False)
    return first, second


def generate_macro_populations(config: SimulationConfig) -> List[Groups]:
    """Normal groups for every macro-population, each from its own substream."""
    macros = []
    for m, macro in enumerate(config.macro_pops):
        rng = substream(config.seed, _MACRO_STREAM, m)
        macros.append(
            (
                rng.normal(macro.mean1, macro.sd, macro.group_size),
                rng.normal(macro.mean2, macro.sd, macro.group_size),
            )
        )
    return macros


def sample_and_test(
    population: Groups,
    n_total: int,
    rng: np.random.Generator,
    sig: float = 0.05,
    mes_threshold: float = 0.495,
) -> SampleOutcome:
    """
    Draw n_total / 2 observations from each group without replacement and
    test group 2 > group 1.
    """
    sample = _extract(population, n_total // 2, rng)
    result = two_sample_t(sample[0], sample[1])
    significant = result.p_one_tailed <= sig
    return SampleOutcome(
        test=result, significant=significant, captured=significant and result.d > mes_threshold
    )


def run_study(
    config: SimulationConfig, study_index: int, macros: List[Groups]
) -> StudyOutcome:
    """Run one study: pops_per_study research populations, one sample per condition each."""
    extraction = config.extraction_for(study_index)
    macro = macros[extraction.macro]
    conditions = config.conditions
    counts = {name: 0 for name in conditions}
    sig_any = {name: 0 for name in conditions}
    descriptives = []

    for pop in range(config.pops_per_study):
        rng = substream(config.seed, _POPULATION_STREAM, study_index, pop)
        population = _extract(macro, extraction.size // 2, rng)
        descriptives.append(PopulationDescriptives.of(population))
        for c, name in enumerate(conditions):
            outcome = sample_and_test(
                population,
                config.condition_ns[name],
                substream(config.seed, _SAMPLE_STREAM, study_index, pop, c),
                config.sig,
                config.mes_threshold,
            )
            sig_any[name] += outcome.significant
            counts[name] += outcome.captured

    logger.info(
        "Study %d (macro %d, research N %d): captures %s",
        study_index + 1,
        extraction.macro,
        extraction.size,
        ", ".join(f"{k}={v}" for k, v in counts.items()),
    )
    return StudyOutcome(
        study_index=study_index,
        research_n=extraction.size,
        pops=config.pops_per_study,
        counts=counts,
        sig_any=sig_any,
        macro_descriptives=PopulationDescriptives.of(macro),
        population_descriptives=descriptives,
    )


def _run_study_standalone(config: SimulationConfig, study_index: int) -> StudyOutcome:
    return run_study(config, study_index, generate_macro_populations(config))


def run_simulation(config: SimulationConfig, workers: int = 1) -> List[StudyOutcome]:
    """
    Run every study of a simulation.

    Args:
        config: The simulation to run
        workers: Processes to fan studies out to; 1 runs in-process

    Returns:
        StudyOutcome per study, in study order

    Raises:
        ConfigError: If the config fails validation (nothing is run)
    """
    validation = SimulationConfigValidator.validate(config)
    for warning in validation.warnings:
        logger.warning(warning)
    if not validation.passed:
        raise ConfigError(
            "Invalid simulation config: " + "; ".join(validation.errors), validation.errors
        )

    studies = range(config.n_studies)
    if workers > 1 and config.n_studies > 1:
        logger.info("Running %d studies on %d workers", config.n_studies, workers)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(
                executor.map(_run_study_standalone, [config] * config.n_studies, studies)
            )

    macros = generate_macro_populations(config)
    return [run_study(config, i, macros) for i in studies]
