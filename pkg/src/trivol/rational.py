"""Exact scalar type plus its on-the-wire string form.

``fractions.Fraction`` already is an arbitrary-precision rational kept in
lowest terms with a positive denominator, so the package uses it directly
as its scalar type. This module adds the "p/q" string round-trip used by
the CLI and by the JSON/CSV file formats.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def parse_rational(value: object) -> Fraction:
    """Parse an int, a "p/q" or decimal string, or a float into a Fraction.

    Floats are interpreted through their shortest decimal representation,
    so 0.1 parses as 1/10 rather than as the underlying binary value.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational value: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        return Fraction(str(value))
    raise ValueError(f"not a rational value: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render a Fraction as "p/q", or as a bare integer when q == 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
