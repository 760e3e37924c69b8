"""
Simulation configuration: macro-populations, the extraction plan and the
sampling conditions under comparison.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List

from sensize.core.errors import ConfigError
from sensize.core.sensitiveness import Tails

MAX_SEED = 2**64 - 1


class Condition(str, Enum):
    """Sampling strategies compared by the simulation."""

    PWR = "PWR"
    SNS = "SNS"
    THMB = "THMB"


DEFAULT_CONDITION_NS: Dict[str, int] = {
    Condition.PWR.value: 102,
    Condition.SNS.value: 48,
    Condition.THMB.value: 30,
}


@dataclass(frozen=True)
class MacroPopulation:
    """Two normal groups; group 2 is the one expected to score higher."""

    group_size: int
    mean1: float = 10.0
    mean2: float = 10.5
    sd: float = 1.0

    def __post_init__(self) -> None:
        if self.group_size < 2:
            raise ConfigError(f"group_size must be >= 2, got {self.group_size}")
        if not (self.sd > 0 and math.isfinite(self.sd)):
            raise ConfigError(f"sd must be a positive finite number, got {self.sd}")
        if not (math.isfinite(self.mean1) and math.isfinite(self.mean2)):
            raise ConfigError("Group means must be finite")

    @property
    def effect_size(self) -> float:
        """Generating Cohen's d."""
        return (self.mean2 - self.mean1) / self.sd

    def to_dict(self) -> Dict[str, Any]:
        return {
            "group_size": self.group_size,
            "mean1": self.mean1,
            "mean2": self.mean2,
            "sd": self.sd,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MacroPopulation":
        return cls(
            group_size=int(data["group_size"]),
            mean1=float(data.get("mean1", 10.0)),
            mean2=float(data.get("mean2", 10.5)),
            sd=float(data.get("sd", 1.0)),
        )


@dataclass(frozen=True)
class Extraction:
    """One research-population draw: source macro-population and total size."""

    macro: int
    size: int

    def to_dict(self) -> Dict[str, Any]:
        return {"macro": self.macro, "size": self.size}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Extraction":
        return cls(macro=int(data["macro"]), size=int(data["size"]))


_REFERENCE_PLAN = [
    Extraction(1, 2000),
    Extraction(0, 2000),
    Extraction(2, 1000),
    Extraction(2, 200),
    Extraction(3, 200),
    Extraction(0, 1000),
    Extraction(1, 500),
    Extraction(3, 500),
]


@dataclass
class SimulationConfig:
    """
    Everything that determines a simulation run.

    Study i draws its research populations as ``extraction_plan[i % len]``;
    every research population is split into two equal groups, and so is
    every condition sample. Cross-field rules (even sizes, samples fitting
    their populations) are checked by ``SimulationConfigValidator``.
    """

    seed: int = 2021
    macro_pops: List[MacroPopulation] = field(
        default_factory=lambda: [MacroPopulation(n) for n in (2000, 1500, 1000, 500)]
    )
    extraction_plan: List[Extraction] = field(default_factory=lambda: list(_REFERENCE_PLAN))
    n_studies: int = 2
    pops_per_study: int = 43
    condition_ns: Dict[str, int] = field(default_factory=lambda: dict(DEFAULT_CONDITION_NS))
    sig: float = 0.05
    tails: Tails = Tails.ONE
    mes_threshold: float = 0.495

    def __post_init__(self) -> None:
        if isinstance(self.seed, bool) or not (0 <= self.seed <= MAX_SEED):
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.n_studies < 1:
            raise ConfigError(f"n_studies must be >= 1, got {self.n_studies}")
        if self.pops_per_study < 1:
            raise ConfigError(f"pops_per_study must be >= 1, got {self.pops_per_study}")
        if not self.macro_pops:
            raise ConfigError("At least one macro-population is required")
        if not self.extraction_plan:
            raise ConfigError("extraction_plan cannot be empty")
        if not self.condition_ns:
            raise ConfigError("At least one condition is required")
        self.tails = Tails(self.tails)

    @classmethod
    def desk_scale(cls, seed: int = 2021) -> "SimulationConfig":
        """Scaled-down populations and two studies, quick enough for tests."""
        return cls(seed=seed)

    @classmethod
    def full_scale(cls, seed: int = 2021) -> "SimulationConfig":
        """Full-size macro-populations and eight studies."""
        return cls(
            seed=seed,
            macro_pops=[MacroPopulation(n) for n in (10000, 5000, 2000, 1000)],
            n_studies=8,
        )

    @property
    def conditions(self) -> List[str]:
        return list(self.condition_ns)

    def extraction_for(self, study_index: int) -> Extraction:
        """Extraction used by a study, cycling through the plan."""
        return self.extraction_plan[study_index % len(self.extraction_plan)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "macro_pops": [m.to_dict() for m in self.macro_pops],
            "extraction_plan": [e.to_dict() for e in self.extraction_plan],
            "n_studies": self.n_studies,
            "pops_per_study": self.pops_per_study,
            "condition_ns": dict(self.condition_ns),
            "sig": self.sig,
            "tails": int(self.tails),
            "mes_threshold": self.mes_threshold,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SimulationConfig":
        """
        Build a config from a parsed document; missing keys take the
        desk-scale defaults.

        Raises:
            ConfigError: If a value has the wrong shape
        """
        defaults = cls()
        try:
            macro_pops = (
                [MacroPopulation.from_dict(m) for m in data["macro_pops"]]
                if "macro_pops" in data
                else defaults.macro_pops
            )
            plan = (
                [Extraction.from_dict(e) for e in data["extraction_plan"]]
                if "extraction_plan" in data
                else defaults.extraction_plan
            )
            condition_ns = (
                {str(k): int(v) for k, v in data["condition_ns"].items()}
                if "condition_ns" in data
                else defaults.condition_ns
            )
            return cls(
                seed=int(data.get("seed", defaults.seed)),
                macro_pops=macro_pops,
                extraction_plan=plan,
                n_studies=int(data.get("n_studies", defaults.n_studies)),
                pops_per_study=int(data.get("pops_per_study", defaults.pops_per_study)),
                condition_ns=condition_ns,
                sig=float(data.get("sig", defaults.sig)),
                tails=Tails(int(data.get("tails", 1))),
                mes_threshold=float(data.get("mes_threshold", defaults.mes_threshold)),
            )
        except (KeyError, TypeError, AttributeError) as e:
            raise ConfigError(f"Malformed simulation config: {e}") from e
        except ValueError as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(f"Malformed simulation config: {e}") from e
