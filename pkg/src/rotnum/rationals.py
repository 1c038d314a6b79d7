"""Exact rational helpers: parsing, rendering and Farey grids.

All quantities in this package are `fractions.Fraction` values, which are
always stored in lowest terms with a positive denominator.  This module
adds the textual conventions used across the CLI and file formats: a
rational renders as ``p/q``, or as a bare integer when the denominator
is 1.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidArgument, ParseError


class _Irrational:
    """Marker for an irrational rotation number (no exact representation)."""

    __slots__ = ()

    def __repr__(self):
        return "IRRATIONAL"


#: Singleton marker accepted by operations whose behaviour differs for
#: irrational inputs (e.g. the commutator rotation-number bound).
IRRATIONAL = _Irrational()


def parse_fraction(text: str) -> Fraction:
    """Parse ``p/q`` or a bare integer into an exact rational."""
    text = text.strip()
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc
    return value


def format_fraction(value: Fraction) -> str:
    """Render exactly, omitting the denominator when it is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def farey_fractions(max_denominator: int) -> list[Fraction]:
    """All fractions in [0, 1) with denominator <= max_denominator, sorted.

    This is the Farey sequence of the given order with the endpoint 1
    removed, so it always starts at 0.
    """
    if max_denominator < 1:
        raise InvalidArgument("max denominator must be >= 1")
    grid = {Fraction(p, q) for q in range(1, max_denominator + 1) for p in range(q)}
    return sorted(grid)


def mod_one(value: Fraction) -> Fraction:
    """Reduce into [0, 1)."""
    return value - (value.numerator // value.denominator)
