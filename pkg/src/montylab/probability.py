"""Exact probabilities as rational numbers.

Every closed-form quantity in this package is computed with
:class:`fractions.Fraction` so that tests can assert equality instead of
closeness.  Floats appear only in Monte Carlo estimates and display
formatting.
"""

from __future__ import annotations

from fractions import Fraction


class InvalidParameter(ValueError):
    """A probability parameter is outside [0, 1] or cannot be parsed."""


def as_probability(value, name: str = "probability") -> Fraction:
    """Coerce ``value`` to an exact Fraction in [0, 1].

    Accepts Fractions, ints, and strings in either rational ("2/3") or
    decimal ("0.25") notation.  Floats are interpreted via their repr so
    that 0.1 means 1/10, not the nearest binary float.

    Raises:
        InvalidParameter: if the value cannot be parsed or is out of range.
    """
    try:
        if isinstance(value, float):
            prob = Fraction(repr(value))
        else:
            prob = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InvalidParameter(f"{name} must be a rational number, got {value!r}") from exc
    if not 0 <= prob <= 1:
        raise InvalidParameter(f"{name} must lie in [0, 1], got {prob}")
    return prob


def rational_str(value: Fraction) -> str:
    """Render a Fraction the way tables expect: ``2/3``, ``1/2``, ``0``, ``1``."""
    return str(value)


def decimal_str(value: Fraction, places: int = 6) -> str:
    """Fixed-point decimal rendering used next to the exact value."""
    return f"{float(value):.{places}f}"
