"""
Markdown rendering of result tables using Jinja2.
"""

from typing import Any, Dict, List, Optional, Sequence

from jinja2 import Environment, StrictUndefined

MARKDOWN_TABLE = """\
{% if title %}## {{ title }}

{% endif %}{% if settings %}_{{ settings | join(", ") }}_

{% endif %}| {{ columns | join(" | ") }} |
|{% for _ in columns %}---|{% endfor %}
{% for row in rows %}| {{ row | join(" | ") }} |
{% endfor %}"""

# Undefined names fail loudly; a missing column must not print as blank.
_ENV = Environment(undefined=StrictUndefined, keep_trailing_newline=True, autoescape=False)
_TABLE = _ENV.from_string(MARKDOWN_TABLE)


class TemplateRenderer:
    """Renders report tables; cells arrive already formatted."""

    @staticmethod
    def markdown_table(
        columns: Sequence[str],
        rows: Sequence[Sequence[Any]],
        title: str = "",
        settings: Optional[Dict[str, Any]] = None,
    ) -> str:
        """
        Render already-formatted cells as a Markdown pipe table.

        Pipes inside cells are escaped.

        Args:
            columns: Header cells
            rows: Body rows, each as long as ``columns``
            title: Optional heading
            settings: Optional settings shown in italics above the table

        Returns:
            The Markdown text, ending with a newline

        Raises:
            ValueError: If a row does not match the header
        """
        for row in rows:
            if len(row) != len(columns):
                raise ValueError(f"Row has {len(row)} cells, expected {len(columns)}")
        body: List[List[str]] = [[_cell(value) for value in row] for row in rows]
        return _TABLE.render(
            title=title,
            settings=[f"{k}={v}" for k, v in (settings or {}).items()],
            columns=[_cell(c) for c in columns],
            rows=body,
        )


def _cell(value: Any) -> str:
    return str(value).replace("|", "\\|")
