"""Exact rational parsing and formatting shared by every module.

No binary floating point is ever accepted: decimals are read from their
string form, so ``"1.9"`` becomes ``Fraction(19, 10)``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

RationalLike = Union[int, Fraction, str]


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction, refusing floats."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def fmt(value: Fraction | int | None) -> str | None:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is one."""
    if value is None:
        return None
    return str(Fraction(value))
