"""
sensize table command - Reference tables at Cohen's conventional effect sizes.
"""

from pathlib import Path
from typing import Optional

import click

from sensize.application.cli.options import emit, handle_errors, output_options
from sensize.core.tables import generate_supp_table2, generate_table2
from sensize.infrastructure.storage.serializers import Report

TITLES = {
    "table2": "Sample sizes for sensitiveness and power at Cohen's effect sizes",
    "supp2": "Target and actual effect sizes, sample sizes and critical values",
}


@click.command()
@click.argument("which", type=click.Choice(sorted(TITLES)))
@output_options
def table(which: str, output_format: str, precision: int, out: Optional[Path]) -> None:
    """
    Regenerate a reference table (one-tailed, sig = alpha = .05).

    WHICH is table2 (sensitiveness and power N) or supp2 (critical values
    and achieved effect sizes).

    Examples:

        sensize table table2 --format markdown
        sensize table supp2 --format csv --out supp2.csv
    """
    with handle_errors():
        rows = generate_table2() if which == "table2" else generate_supp_table2()

    settings = {"sig": 0.05, "tails": 1}
    if which == "table2":
        settings["power"] = 0.80
    report = Report(
        title=TITLES[which],
        settings=settings,
        records=[row.to_record() for row in rows],
        payload=[row.to_dict() for row in rows],
    )
    emit(report, output_format, precision, out)
