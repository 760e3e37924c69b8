"""
sensize mes command - Minimum effect size a test can detect at a given N.
"""

from pathlib import Path
from typing import Optional

import click

from sensize.application.cli.options import (
    build_test_spec,
    emit,
    handle_errors,
    output_options,
    spec_settings,
    test_options,
)
from sensize.core.effect_size import Metric
from sensize.core.sensitiveness import mes_at_n
from sensize.infrastructure.storage.serializers import Report


@click.command()
@test_options
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Total sample size")
@click.option(
    "--metric",
    type=click.Choice([m.value for m in Metric]),
    help="Report the MES in this metric (default: the test's own)",
)
@click.option("--dfs", type=click.IntRange(min=1), help="dfs of Cramér's V (--metric V)")
@output_options
def mes(
    test_name: str,
    df: Optional[int],
    groups: Optional[int],
    sig: float,
    tails: str,
    n: int,
    metric: Optional[str],
    dfs: Optional[int],
    output_format: str,
    precision: int,
    out: Optional[Path],
) -> None:
    """
    Show the critical value and minimum effect size at a sample size.

    Examples:

        # What can 30 participants in two groups detect?
        sensize mes --test t2 --n 30

        # At the 1% level
        sensize mes --test t2 --n 164 --sig 0.01
    """
    spec = build_test_spec(test_name, df, groups, sig, tails)
    with handle_errors():
        result = mes_at_n(spec, n, Metric(metric) if metric else None, dfs)

    record = {
        "n": result.n,
        "df": ",".join(str(d) for d in result.df),
        "critical_value": result.critical_value,
        "metric": result.mes.label,
        "mes": result.mes.value,
    }
    report = Report(
        title="Minimum effect size",
        settings=spec_settings(spec),
        records=[record],
        payload=result.to_dict(),
    )
    emit(report, output_format, precision, out)
