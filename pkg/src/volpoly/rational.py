"""Parsing and formatting of exact rationals for the JSON formats."""

from fractions import Fraction
from numbers import Rational


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to Fraction.

    Floats are rejected: every entry point is exact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def format_fraction(x: Fraction) -> str:
    """Canonical ``num/den`` string, denominator positive (``3/1`` for integers)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
