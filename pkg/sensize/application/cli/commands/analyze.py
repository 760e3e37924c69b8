"""
sensize analyze command - Pairwise comparisons from saved simulation outcomes.
"""

from pathlib import Path
from typing import Optional

import click

from sensize.application.cli.options import emit, handle_errors, output_options
from sensize.core.analysis import study_table_records, summarize_studies, totals_table_records
from sensize.core.config import SimulationConfig
from sensize.core.simulation import StudyOutcome
from sensize.infrastructure.storage.hasher import ConfigHasher
from sensize.infrastructure.storage.serializers import Report, load_outcomes


@click.command()
@click.argument("outcomes_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option(
    "--layout",
    type=click.Choice(["totals", "studies"]),
    default="totals",
    show_default=True,
    help="Accumulated totals or one column per study",
)
@output_options
def analyze(
    outcomes_path: Path,
    layout: str,
    output_format: str,
    precision: int,
    out: Optional[Path],
) -> None:
    """
    Re-run the capture analysis on an outcomes.json file.

    The recorded config must still match the fingerprint saved with it.

    Examples:

        sensize analyze simulation/outcomes.json --format markdown --precision 2
        sensize analyze simulation/outcomes.json --layout studies --format csv
    """
    with handle_errors():
        document = load_outcomes(outcomes_path)
        config = SimulationConfig.from_dict(document["config"])
        fingerprint = document["fingerprint"]
        if not ConfigHasher.verify_hash(config, fingerprint):
            raise ValueError(
                f"Config recorded in {outcomes_path} does not match fingerprint {fingerprint!r}"
            )
        if not isinstance(document["outcomes"], list):
            raise ValueError(f"Outcomes in {outcomes_path} must be a list")
        outcomes = [StudyOutcome.from_dict(o) for o in document["outcomes"]]
        summaries = summarize_studies(outcomes)

    settings = {"seed": config.seed, "fingerprint": fingerprint}
    if layout == "totals":
        report = Report(
            "Overall results",
            settings,
            totals_table_records(summaries[-1]),
            payload=summaries[-1].to_dict(),
        )
    else:
        report = Report(
            "Results per study",
            settings,
            study_table_records(summaries),
            payload=[s.to_dict() for s in summaries],
        )
    emit(report, output_format, precision, out)
