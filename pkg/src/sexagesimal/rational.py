"""Exact rationals and the bridge to sexagesimal expansions.

:class:`fractions.Fraction` already keeps numerator and denominator in
lowest terms with a positive denominator, so it serves as the rational
type.  The conversions in both directions are done here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .numeral import BASE, SexNumber, digits_to_int, int_to_digits

Rational = Fraction
RationalLike = Union[Fraction, int]

_TABLE_LIMIT = 1 << 20

__all__ = [
    "Rational",
    "rat_add",
    "rat_div",
    "rat_mul",
    "rat_sub",
    "rational_from_json",
    "rational_to_json",
    "rational_to_sex",
    "sex_to_rational",
]


def rat_add(a: RationalLike, b: RationalLike) -> Fraction:
    return Fraction(a) + Fraction(b)


def rat_sub(a: RationalLike, b: RationalLike) -> Fraction:
    return Fraction(a) - Fraction(b)


def rat_mul(a: RationalLike, b: RationalLike) -> Fraction:
    return Fraction(a) * Fraction(b)


def rat_div(a: RationalLike, b: RationalLike) -> Fraction:
    b = Fraction(b)
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return Fraction(a) / b


def sex_to_rational(x: SexNumber) -> Fraction:
    """Exact value of an expansion.

    With ``p`` prefix digits and a repetend of length ``l`` the fractional
    part is ``(prefix * (60**l - 1) + repetend) / (60**p * (60**l - 1))``.
    """
    whole = digits_to_int(x.int_digits)
    p = len(x.frac_prefix)
    prefix = digits_to_int(x.frac_prefix)
    if x.repetend:
        cycle = BASE ** len(x.repetend) - 1
        frac = Fraction(prefix * cycle + digits_to_int(x.repetend), BASE**p * cycle)
    else:
        frac = Fraction(prefix, BASE**p)
    return x.sign * (whole + frac)


def rational_to_sex(r: RationalLike) -> SexNumber:
    """Expand ``r`` in base 60 by long division.

    Each remainder is recorded with the position where it appeared; the
    first remainder seen twice closes the repetend.  The expansion
    terminates exactly when the reduced denominator has no prime factor
    other than 2, 3 and 5.  There is no cap on the period length.
    """
    r = Fraction(r)
    sign = -1 if r < 0 else 1
    num, den = abs(r.numerator), r.denominator
    whole, rem = divmod(num, den)
    digits: list[int] = []
    append = digits.append
    i = 0
    # remainders are < den, so small denominators get a flat table instead of a dict
    seen = [-1] * den if den <= _TABLE_LIMIT else {}
    if isinstance(seen, list):
        while rem and seen[rem] < 0:
            seen[rem] = i
            i += 1
            d, rem = divmod(rem * BASE, den)
            append(d)
    else:
        while rem and rem not in seen:
            seen[rem] = i
            i += 1
            d, rem = divmod(rem * BASE, den)
            append(d)
    start = seen[rem] if rem else i
    return SexNumber._trusted(sign, int_to_digits(whole), digits[:start], digits[start:])


def rational_to_json(r: RationalLike) -> dict:
    r = Fraction(r)
    return {"numerator": str(r.numerator), "denominator": str(r.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["numerator"]), int(obj["denominator"]))
