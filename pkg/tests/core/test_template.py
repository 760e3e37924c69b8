"""
Unit tests for the TemplateRenderer service.
"""

import pytest

from sensize.core.template import TemplateRenderer


class TestMarkdownTable:
    """Test cases for Markdown table rendering."""

    def test_plain_table(self):
        """Test header, separator and body rows."""
        text = TemplateRenderer.markdown_table(["test", "n_sns"], [["t", "48"], ["r", "32"]])
        assert text == "| test | n_sns |\n|---|---|\n| t | 48 |\n| r | 32 |\n"

    def test_title_and_settings(self):
        """Test the optional heading and settings line."""
        text = TemplateRenderer.markdown_table(
            ["n"], [["48"]], title="Sample sizes", settings={"sig": 0.05, "tails": 1}
        )
        assert text.startswith("## Sample sizes\n\n_sig=0.05, tails=1_\n\n| n |")

    def test_empty_body(self):
        """Test a table without rows keeps its header."""
        assert TemplateRenderer.markdown_table(["a", "b"], []) == "| a | b |\n|---|---|\n"

    def test_pipes_escaped(self):
        """Test a pipe inside a cell does not open a new column."""
        text = TemplateRenderer.markdown_table(["x"], [["a|b"]])
        assert text.splitlines()[-1] == "| a\\|b |"

    def test_non_string_cells(self):
        """Test cells are converted to text."""
        text = TemplateRenderer.markdown_table(["n", "ok"], [[48, True]])
        assert text.splitlines()[-1] == "| 48 | True |"

    def test_row_length_mismatch(self):
        """Test rows must match the header."""
        with pytest.raises(ValueError, match="expected 2"):
            TemplateRenderer.markdown_table(["a", "b"], [["1"]])
