"""
sensize posthoc command - Post-hoc sensitiveness of an achieved sample.
"""

from pathlib import Path
from typing import Optional

import click

from sensize.application.cli.options import emit, handle_errors, output_options
from sensize.core.sensitiveness import post_hoc_sensitiveness
from sensize.infrastructure.storage.serializers import Report


@click.command()
@click.option("--n-actual", type=int, required=True, help="Sample size actually achieved")
@click.option("--n-min", type=int, required=True, help="Minimum sample size from solve")
@output_options
def posthoc(
    n_actual: int, n_min: int, output_format: str, precision: int, out: Optional[Path]
) -> None:
    """
    Percentage by which a sample over- or undershoots the minimum N.

    Examples:

        # 30 collected where 48 were needed: -37.5%
        sensize posthoc --n-actual 30 --n-min 48
    """
    with handle_errors():
        percent = post_hoc_sensitiveness(n_actual, n_min)

    if percent > 0:
        verdict = "over-sensitive"
    elif percent < 0:
        verdict = "under-sensitive"
    else:
        verdict = "exact"
    record = {
        "n_actual": n_actual,
        "n_min": n_min,
        "sensitiveness_percent": percent,
        "verdict": verdict,
    }
    emit(Report(title="Post-hoc sensitiveness", records=[record]), output_format, precision, out)
