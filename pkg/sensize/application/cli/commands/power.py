"""
sensize power command - Power at N, or minimum N for a target power.
"""

from pathlib import Path
from typing import Any, Dict, Optional

import click

from sensize.application.cli.options import (
    build_test_spec,
    emit,
    handle_errors,
    output_options,
    parse_effect_size,
    spec_settings,
    test_options,
)
from sensize.core.effect_size import EffectSize
from sensize.core.power import PowerSpec, min_n_for_power, power_at_n, searches_even_n
from sensize.infrastructure.storage.serializers import Report


@click.command()
@test_options
@click.option(
    "--es",
    "population_es",
    required=True,
    callback=parse_effect_size,
    help="Population effect size as metric=value",
)
@click.option(
    "--power",
    "target_power",
    type=click.FloatRange(0.0, 1.0, min_open=True, max_open=True),
    default=0.80,
    show_default=True,
    help="Target power (ignored with --n)",
)
@click.option("--n", "n", type=click.IntRange(min=1), help="Compute power at this total N")
@output_options
def power(
    test_name: str,
    df: Optional[int],
    groups: Optional[int],
    sig: float,
    tails: str,
    population_es: EffectSize,
    target_power: float,
    n: Optional[int],
    output_format: str,
    precision: int,
    out: Optional[Path],
) -> None:
    """
    Neyman-Pearson power analysis; --sig doubles as alpha.

    Examples:

        # N for 80% power at d = 0.5
        sensize power --test t2 --es d=0.5

        # Power of a 48-participant study at d = 0.5
        sensize power --test t2 --es d=0.5 --n 48
    """
    spec = build_test_spec(test_name, df, groups, sig, tails, population_es)
    with handle_errors():
        power_spec = PowerSpec(spec, population_es, target_power)
        record: Dict[str, Any]
        if n is not None:
            record = {
                "population_es": str(population_es),
                "n": n,
                "power": power_at_n(power_spec, n),
            }
        else:
            n_min = min_n_for_power(power_spec)
            record = {
                "population_es": str(population_es),
                "target_power": target_power,
                "n": n_min,
                "power": power_at_n(power_spec, n_min),
                "allocation": "equal groups, even N" if searches_even_n(spec) else "any N",
            }

    settings = spec_settings(spec)
    settings["alpha"] = settings.pop("sig")
    report = Report(title="Power", settings=settings, records=[record])
    emit(report, output_format, precision, out)
