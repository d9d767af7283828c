"""
Rational parsing, rendering and small exact helpers.
"""

from __future__ import annotations

import random
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any

from ..errors import FormatError


def parse_rational(value: Any) -> Fraction:
    """
    Parse "p/q", "p" or a finite decimal string exactly.

    Floats are refused: they would smuggle binary rounding into exact input.
    """
    if isinstance(value, bool):
        raise FormatError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise FormatError(f"not a rational: {value!r}") from e
    raise FormatError(f"not a rational: {value!r} (write it as a \"p/q\" string)")


def format_rational(value: Fraction) -> str:
    return str(value)


def to_decimal(value: Fraction, digits: int = 12) -> str:
    """Render with `digits` significant digits; used only at export time."""
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(value.numerator) / Decimal(value.denominator)
    return format(d, f".{digits}g")


def floor_pow2(value: Fraction) -> Fraction:
    """Largest power of two that is <= value (value > 0)."""
    if value <= 0:
        raise ValueError("floor_pow2 needs a positive value")
    e = value.numerator.bit_length() - value.denominator.bit_length()
    candidate = Fraction(2) ** e
    if candidate > value:
        candidate /= 2
    elif candidate * 2 <= value:
        candidate *= 2
    return candidate


def random_rational(rng: random.Random, lo: Fraction, hi: Fraction, max_bits: int = 16) -> Fraction:
    """Seeded rational in [lo, hi] with a dyadic-or-odd denominator."""
    den = rng.choice((1 << rng.randint(0, max_bits), rng.randint(1, 1 << max_bits) | 1))
    span = (hi - lo) * den
    steps = int(span)
    return lo + Fraction(rng.randint(0, steps), den)
