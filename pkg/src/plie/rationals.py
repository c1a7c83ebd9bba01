"""Exact rational scalars.

Every scalar in this package is a :class:`fractions.Fraction`: arbitrary
precision, always in lowest terms with a positive denominator. There is no
floating point anywhere in the core; equality of results always means exact
equality over Q.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InvalidInputError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def rational(value) -> Fraction:
    """Coerce an int, Fraction, or canonical "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidInputError(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (q > 0). Rejects floats and empty strings."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise InvalidInputError(f"malformed rational string: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Canonical string: lowest terms, "p" for integers, "p/q" otherwise."""
    return str(Fraction(value))
