"""
sensize - Sample sizes for sensitiveness

Minimum effect sizes, minimum sample sizes and post-hoc sensitiveness for
significance tests, with power for comparison, reference tables and a
seeded simulation of sampling strategies.
"""

from pathlib import Path
from typing import Union

from sensize.core.analysis import condition_shares, pairwise_gof
from sensize.core.config import SimulationConfig
from sensize.core.effect_size import EffectSize, Metric, benchmark
from sensize.core.errors import (
    ConfigError,
    DegenerateDataError,
    DomainError,
    NumericError,
    SensizeError,
    SpecError,
)
from sensize.core.power import PowerSpec, min_n_for_power, power_at_n
from sensize.core.sensitiveness import (
    TestFamily,
    TestSpec,
    Tails,
    mes_at_n,
    min_sample_size,
    post_hoc_sensitiveness,
)
from sensize.core.simulation import run_simulation, two_sample_t
from sensize.infrastructure.storage.config_loader import ConfigLoader

__version__ = "0.1.0"
__all__ = [
    "ConfigError",
    "DegenerateDataError",
    "DomainError",
    "EffectSize",
    "Metric",
    "NumericError",
    "PowerSpec",
    "SensizeError",
    "SimulationConfig",
    "SpecError",
    "Tails",
    "TestFamily",
    "TestSpec",
    "benchmark",
    "condition_shares",
    "load_config",
    "mes_at_n",
    "min_n_for_power",
    "min_sample_size",
    "pairwise_gof",
    "post_hoc_sensitiveness",
    "power_at_n",
    "run_simulation",
    "two_sample_t",
]


def load_config(path: Union[str, Path]) -> SimulationConfig:
    """
    Load a simulation config from a YAML, JSON or TOML file.

    Args:
        path: Path to the config file

    Returns:
        The loaded SimulationConfig
    """
    return ConfigLoader().load_config(path)
