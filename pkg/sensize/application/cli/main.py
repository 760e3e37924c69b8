"""
Main CLI entry point for sensize.
"""

import logging
import sys

import click

from sensize import __version__
from sensize.application.cli.commands import analyze, mes, posthoc, power, simulate, solve, table


@click.group()
@click.version_option(version=__version__)
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for solver steps")
def cli(verbose: int) -> None:
    """
    sensize - Sample sizes for sensitiveness

    Plan the N a significance test needs to detect a minimum effect size,
    compare with power analysis, and reproduce the reference tables and
    sampling simulation.
    """
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    logging.getLogger("sensize").setLevel(level)


# Register commands
cli.add_command(solve.solve)
cli.add_command(mes.mes)
cli.add_command(posthoc.posthoc)
cli.add_command(power.power)
cli.add_command(table.table)
cli.add_command(simulate.simulate)
cli.add_command(analyze.analyze)


if __name__ == "__main__":
    cli()
