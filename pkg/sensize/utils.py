"""
Rounding and formatting helpers.

round_half_up also drives the rounded comparisons in the solver and the
reference tables; the others only format output.
"""

import math
from decimal import ROUND_HALF_UP, Decimal


def round_half_up(value: float, places: int) -> float:
    """
    Round to a number of decimals, ties away from zero.

    This is how published tables round, unlike Python's ``round`` which
    rounds ties to even on the binary value.

    Args:
        value: Number to round
        places: Decimal places, >= 0

    Returns:
        The rounded value

    Example:
        >>> round_half_up(0.2125, 3)
        0.213
    """
    if math.isnan(value) or math.isinf(value):
        return value
    quantum = Decimal(1).scaleb(-places)
    return float(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def format_fixed(value: float, places: int) -> str:
    """Format with a fixed number of decimals using round_half_up."""
    return f"{round_half_up(value, places):.{places}f}"


_ROMAN = [
    (1000, "M"),
    (900, "CM"),
    (500, "D"),
    (400, "CD"),
    (100, "C"),
    (90, "XC"),
    (50, "L"),
    (40, "XL"),
    (10, "X"),
    (9, "IX"),
    (5, "V"),
    (4, "IV"),
    (1, "I"),
]


def to_roman(number: int) -> str:
    """Roman numeral for a positive integer (study column headers)."""
    if number < 1:
        raise ValueError(f"Roman numerals need a positive integer, got {number}")
    parts = []
    for arabic, roman in _ROMAN:
        count, number = divmod(number, arabic)
        parts.append(roman * count)
    return "".join(parts)
