"""
Result serialization to JSON, CSV and Markdown.
"""

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

from sensize.core.template import TemplateRenderer
from sensize.utils import format_fixed

MAX_PRECISION = 12


class FormatKind(str, Enum):
    JSON = "json"
    CSV = "csv"
    MARKDOWN = "markdown"


@dataclass(frozen=True)
class OutputFormat:
    """
    Output format and the number of decimals printed for reals.

    JSON ignores ``precision`` and keeps full float precision.
    """

    kind: FormatKind = FormatKind.JSON
    precision: int = 4

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", FormatKind(self.kind))
        if not (0 <= self.precision <= MAX_PRECISION):
            raise ValueError(f"precision must be in [0, {MAX_PRECISION}], got {self.precision}")


@dataclass
class Report:
    """
    A titled result with its settings block.

    ``records`` are the flat rows printed by CSV and Markdown; ``payload`` is
    the lossless JSON body and defaults to the records.
    """

    title: str
    settings: Dict[str, Any] = field(default_factory=dict)
    records: List[Dict[str, Any]] = field(default_factory=list)
    payload: Optional[Any] = None

    @property
    def columns(self) -> List[str]:
        """Union of record keys, in first-seen order."""
        seen: Dict[str, None] = {}
        for record in self.records:
            for key in record:
                seen.setdefault(key, None)
        return list(seen)


def format_cell(value: Any, precision: int) -> str:
    """Text for one table cell; reals are rounded half-up to ``precision``."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_fixed(value, precision)
    return str(value)


def to_json(report: Report) -> str:
    body = report.payload if report.payload is not None else report.records
    document = {"title": report.title, "settings": report.settings, "data": body}
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def to_csv(report: Report, precision: int) -> str:
    buffer = io.StringIO()
    for key, value in report.settings.items():
        buffer.write(f"# {key}={format_cell(value, precision)}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    columns = report.columns
    writer.writerow(columns)
    for record in report.records:
        writer.writerow([format_cell(record.get(c), precision) for c in columns])
    return buffer.getvalue()


def to_markdown(report: Report, precision: int) -> str:
    columns = report.columns
    rows = [[format_cell(record.get(c), precision) for c in columns] for record in report.records]
    settings = {k: format_cell(v, precision) for k, v in report.settings.items()}
    return TemplateRenderer.markdown_table(columns, rows, title=report.title, settings=settings)


def render(report: Report, fmt: OutputFormat) -> str:
    """
    Serialize a report.

    Args:
        report: The report to serialize
        fmt: Output format and precision

    Returns:
        The serialized text, ending with a newline
    """
    if fmt.kind is FormatKind.JSON:
        return to_json(report)
    if fmt.kind is FormatKind.CSV:
        return to_csv(report, fmt.precision)
    return to_markdown(report, fmt.precision)


def write_report(report: Report, fmt: OutputFormat, path: Path) -> Path:
    """Serialize a report to a file, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render(report, fmt), encoding="utf-8")
    return path


def save_outcomes(
    path: Path, config: Dict[str, Any], fingerprint: str, outcomes: List[Dict[str, Any]]
) -> Path:
    """
    Write simulation outcomes with the config that produced them.

    The document has no timestamps, so identical runs give identical files.
    """
    report = Report(
        title="Simulation outcomes",
        settings={"seed": config["seed"], "fingerprint": fingerprint},
        payload={"config": config, "outcomes": outcomes},
    )
    return write_report(report, OutputFormat(FormatKind.JSON), path)


def load_outcomes(path: Path) -> Dict[str, Any]:
    """
    Read a document written by save_outcomes.

    Returns:
        Mapping with ``config``, ``fingerprint`` and ``outcomes`` keys

    Raises:
        FileNotFoundError: If the file doesn't exist
        ValueError: If the file is not an outcomes document
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Outcomes file not found: {path}")
    document = json.loads(path.read_text(encoding="utf-8"))
    try:
        data = document["data"]
        return {
            "config": data["config"],
            "fingerprint": document["settings"]["fingerprint"],
            "outcomes": data["outcomes"],
        }
    except (KeyError, TypeError) as e:
        raise ValueError(f"Not a simulation outcomes file: {path}") from e
