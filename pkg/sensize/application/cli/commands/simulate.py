"""
sensize simulate command - Run the seeded sampling-strategy simulation.
"""

import logging
from pathlib import Path
from typing import Optional

import click

from sensize.application.cli.options import handle_errors
from sensize.core.analysis import (
    descriptives_records,
    study_table_records,
    summarize_studies,
    totals_table_records,
)
from sensize.core.config import SimulationConfig
from sensize.core.simulation import run_simulation
from sensize.infrastructure.storage.config_loader import ConfigLoader
from sensize.infrastructure.storage.hasher import ConfigHasher
from sensize.infrastructure.storage.serializers import (
    FormatKind,
    OutputFormat,
    Report,
    render,
    save_outcomes,
    write_report,
)

logger = logging.getLogger(__name__)

CONFIG_FILE = "config.yaml"
OUTCOMES_FILE = "outcomes.json"
DESCRIPTIVES_FILE = "study_descriptives.csv"
RESULTS_FILE = "study_results.csv"
SUMMARY_FILE = "summary.md"


@click.command()
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Simulation config (YAML, JSON or TOML)",
)
@click.option("--full-scale", is_flag=True, help="Full-size populations and eight studies")
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), help="Override the config seed")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option(
    "--out-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=Path("simulation"),
    show_default=True,
    help="Directory for result files",
)
def simulate(
    config_path: Optional[Path],
    full_scale: bool,
    seed: Optional[int],
    workers: int,
    out_dir: Path,
) -> None:
    """
    Compare power-based, sensitiveness-based and rule-of-thumb sampling.

    Writes config.yaml, outcomes.json, study_descriptives.csv,
    study_results.csv and summary.md to OUT_DIR and prints the summary.
    Pass config.yaml back to --config to repeat the run.

    Examples:

        # Quick desk-scale run
        sensize simulate --seed 7

        # Full-size run on four processes
        sensize simulate --full-scale --workers 4 --out-dir full-run
    """
    if config_path and full_scale:
        raise click.UsageError("--config and --full-scale are mutually exclusive")

    with handle_errors():
        if config_path:
            config = ConfigLoader().load_config(config_path)
        elif full_scale:
            config = SimulationConfig.full_scale()
        else:
            config = SimulationConfig.desk_scale()
        if seed is not None:
            config.seed = seed

        fingerprint = ConfigHasher.generate_hash(config)
        logger.info("Config %s, seed %d", fingerprint, config.seed)
        outcomes = run_simulation(config, workers=workers)

    ConfigLoader(out_dir).save(config, CONFIG_FILE)
    save_outcomes(
        out_dir / OUTCOMES_FILE, config.to_dict(), fingerprint, [o.to_dict() for o in outcomes]
    )
    settings = {"seed": config.seed, "fingerprint": fingerprint}
    csv = OutputFormat(FormatKind.CSV, precision=2)
    write_report(
        Report("Descriptive statistics", settings, descriptives_records(outcomes)),
        csv,
        out_dir / DESCRIPTIVES_FILE,
    )
    summaries = summarize_studies(outcomes)
    write_report(
        Report("Simulation results", settings, study_table_records(summaries)),
        csv,
        out_dir / RESULTS_FILE,
    )

    markdown = OutputFormat(FormatKind.MARKDOWN, precision=2)
    totals = Report("Overall results", settings, totals_table_records(summaries[-1]))
    per_study = Report("Results per study", records=study_table_records(summaries))
    summary = render(totals, markdown) + "\n" + render(per_study, markdown)
    (out_dir / SUMMARY_FILE).write_text(summary, encoding="utf-8")

    click.echo(summary, nl=False)
    click.echo(click.style("✓", fg="green") + f" Results in {out_dir}", err=True)
