"""
Options, parsing and error handling shared by the commands.
"""

import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, Optional, TypeVar

import click

from sensize.core.effect_size import EffectSize
from sensize.core.errors import NumericError, SensizeError, SpecError
from sensize.core.sensitiveness import TestFamily, TestSpec, Tails
from sensize.infrastructure.storage.serializers import (
    FormatKind,
    MAX_PRECISION,
    OutputFormat,
    Report,
    render,
    write_report,
)

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
EXIT_NUMERIC = 3

F = TypeVar("F", bound=Callable[..., Any])


def echo_error(message: str) -> None:
    click.echo(click.style(f"Error: {message}", fg="red"), err=True)


@contextmanager
def handle_errors() -> Iterator[None]:
    """Map library errors to exit codes: numeric failures 3, everything else 2."""
    try:
        yield
    except NumericError as e:
        logger.debug("Numeric failure", exc_info=True)
        echo_error(str(e))
        sys.exit(EXIT_NUMERIC)
    except (SensizeError, ValueError, FileNotFoundError) as e:
        echo_error(str(e))
        sys.exit(EXIT_USAGE)


def parse_effect_size(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Any:
    """Click callback for ``metric=value`` options."""
    if value is None:
        return None
    try:
        return EffectSize.parse(value)
    except ValueError as e:
        raise click.BadParameter(str(e)) from e


def test_options(f: F) -> F:
    """--test, --df, --groups, --sig and --tails."""
    f = click.option(
        "--tails",
        type=click.Choice(["1", "2"]),
        default="1",
        show_default=True,
        help="One- or two-tailed (t tests only)",
    )(f)
    f = click.option(
        "--sig",
        type=click.FloatRange(0.0, 0.5, min_open=True),
        default=0.05,
        show_default=True,
        help="Level of significance",
    )(f)
    f = click.option("--groups", type=click.IntRange(min=2), help="ANOVA groups (--test anova)")(f)
    f = click.option("--df", type=click.IntRange(min=1), help="Chi-square df (--test chi2)")(f)
    f = click.option(
        "--test",
        "test_name",
        type=click.Choice([t.value for t in TestFamily]),
        required=True,
        help="t2 two-group t, r point-biserial t, chi2 goodness-of-fit, anova one-way F",
    )(f)
    return f


def build_test_spec(
    test_name: str,
    df: Optional[int],
    groups: Optional[int],
    sig: float,
    tails: str,
    es: Optional[EffectSize] = None,
) -> TestSpec:
    """
    Build a TestSpec from flags, naming the offending flag on bad combinations.

    Raises:
        click.UsageError: If --df or --groups is missing or misplaced, or the
            --es metric does not fit the test
    """
    family = TestFamily(test_name)
    if family is TestFamily.CHI2_GOF:
        if df is None:
            raise click.UsageError("--df is required for --test chi2")
    elif df is not None:
        raise click.UsageError(f"--df only applies to --test chi2, not {test_name}")
    if family is TestFamily.ONEWAY_F:
        if groups is None:
            raise click.UsageError("--groups is required for --test anova")
    elif groups is not None:
        raise click.UsageError(f"--groups only applies to --test anova, not {test_name}")
    if tails == "2" and family not in (TestFamily.T_TWO_SAMPLE, TestFamily.POINT_BISERIAL_R):
        raise click.UsageError(f"--tails 2 only applies to t tests, not {test_name}")
    spec = TestSpec(family, tails=Tails(int(tails)), sig=sig, df=df, k_groups=groups)
    if es is not None:
        try:
            spec.check_metric(es.metric)
        except SpecError as e:
            raise click.UsageError(f"--es {es}: {e}") from e
    return spec


def output_options(f: F) -> F:
    """--format, --precision and --out."""
    f = click.option(
        "--out", type=click.Path(dir_okay=False, path_type=Path), help="Write to a file"
    )(f)
    f = click.option(
        "--precision",
        type=click.IntRange(0, MAX_PRECISION),
        default=4,
        show_default=True,
        help="Decimals printed for reals (CSV and Markdown)",
    )(f)
    f = click.option(
        "--format",
        "output_format",
        type=click.Choice([k.value for k in FormatKind]),
        default=FormatKind.JSON.value,
        show_default=True,
        help="Output format",
    )(f)
    return f


def emit(report: Report, output_format: str, precision: int, out: Optional[Path]) -> None:
    """Print a report, or write it when --out is given."""
    fmt = OutputFormat(FormatKind(output_format), precision)
    if out is None:
        click.echo(render(report, fmt), nl=False)
        return
    path = write_report(report, fmt, out)
    click.echo(click.style("✓", fg="green") + f" Wrote {path}", err=True)


def spec_settings(spec: TestSpec) -> Dict[str, Any]:
    """Settings block printed with every result."""
    return {"test": spec.label, "sig": spec.sig, "tails": int(spec.tails)}
