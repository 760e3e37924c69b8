"""
sensize solve command - Minimum sample size for a target minimum effect size.
"""

from pathlib import Path
from typing import Optional

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
from sensize.core.sensitiveness import min_sample_size
from sensize.infrastructure.storage.serializers import Report


@click.command()
@test_options
@click.option(
    "--es",
    "target",
    required=True,
    callback=parse_effect_size,
    help="Target minimum effect size as metric=value, e.g. d=0.5 or V(2)=0.212",
)
@click.option(
    "--rounding",
    type=click.IntRange(0, 12),
    help="Round critical value and effect size to this many decimals before comparing",
)
@output_options
def solve(
    test_name: str,
    df: Optional[int],
    groups: Optional[int],
    sig: float,
    tails: str,
    target: EffectSize,
    rounding: Optional[int],
    output_format: str,
    precision: int,
    out: Optional[Path],
) -> None:
    """
    Find the minimum N at which a target effect size is significant.

    Examples:

        # Two groups, medium d
        sensize solve --test t2 --es d=0.5

        # Goodness-of-fit with 1 df
        sensize solve --test chi2 --df 1 --es w=0.3

        # Six-group ANOVA, as a Markdown table
        sensize solve --test anova --groups 6 --es f=0.25 --format markdown
    """
    spec = build_test_spec(test_name, df, groups, sig, tails, target)
    with handle_errors():
        result = min_sample_size(spec, target, precision=rounding)

    settings = spec_settings(spec)
    if rounding is not None:
        settings["rounding"] = rounding
    record = {
        "target": str(target),
        "n_min": result.n_min,
        "df": ",".join(str(d) for d in result.df),
        "critical_value": result.critical_value,
        "achieved_mes": result.achieved_mes.value,
        "at_floor": result.at_floor,
        "unequal_split": result.unequal_split,
    }
    report = Report(
        title="Minimum sample size", settings=settings, records=[record], payload=result.to_dict()
    )
    emit(report, output_format, precision, out)
