"""Regular numbers: integers whose only prime factors are 2, 3 and 5.

These are exactly the divisors whose reciprocals terminate in base 60,
the entries of the Old Babylonian reciprocal (igi) tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numeral import FloatingDigits, SexNumber, format_sex, from_integer, to_floating
from .rational import Fraction, rational_to_sex

DEFAULT_GUARD = 10**6

__all__ = [
    "DEFAULT_GUARD",
    "PeriodGuardExceeded",
    "SmoothSplit",
    "format_reciprocal_table",
    "is_regular",
    "period_length",
    "prefix_length",
    "reciprocal",
    "reciprocal_table",
    "regular_numbers_up_to",
    "smooth_split",
]


class PeriodGuardExceeded(ArithmeticError):
    """The multiplicative order search ran past its iteration guard."""

    def __init__(self, n: int, guard: int):
        super().__init__(f"period of 1/{n} exceeds guard {guard}")
        self.n = n
        self.guard = guard


@dataclass(frozen=True)
class SmoothSplit:
    """``n = 2**a * 3**b * 5**c * m`` with ``gcd(m, 60) == 1``."""

    a: int
    b: int
    c: int
    m: int

    @property
    def value(self) -> int:
        return 2**self.a * 3**self.b * 5**self.c * self.m


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def smooth_split(n: int) -> SmoothSplit:
    _require_positive(n)
    exps = []
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        exps.append(e)
    return SmoothSplit(*exps, n)


def is_regular(n: int) -> bool:
    return smooth_split(n).m == 1


def reciprocal(n: int) -> SexNumber:
    _require_positive(n)
    return rational_to_sex(Fraction(1, n))


def period_length(n: int, guard: int = DEFAULT_GUARD) -> int:
    """Length of the repetend of 1/n; 0 when 1/n terminates.

    This is the multiplicative order of 60 modulo the part of ``n`` coprime
    to 60, found by repeated multiplication.  Raises
    :class:`PeriodGuardExceeded` if no order ``<= guard`` exists.
    """
    m = smooth_split(n).m
    if m == 1:
        return 0
    x, t = 60 % m, 1
    while x != 1:
        if t >= guard:
            raise PeriodGuardExceeded(n, guard)
        x = x * 60 % m
        t += 1
    return t


def prefix_length(n: int) -> int:
    s = smooth_split(n)
    # 60 = 2^2 * 3 * 5, so each base-60 place clears two 2s, one 3, one 5
    return max((s.a + 1) // 2, s.b, s.c)


def regular_numbers_up_to(bound: int) -> list[int]:
    """All regular ``n <= bound`` in ascending order, built from exponent triples."""
    _require_positive(bound)
    out = []
    p2 = 1
    while p2 <= bound:
        p23 = p2
        while p23 <= bound:
            p235 = p23
            while p235 <= bound:
                out.append(p235)
                p235 *= 5
            p23 *= 3
        p2 *= 2
    out.sort()
    return out


def reciprocal_table(bound: int) -> list[tuple[int, FloatingDigits]]:
    if bound < 2:
        raise ValueError("reciprocal table bound must be at least 2")
    return [(n, to_floating(reciprocal(n))) for n in regular_numbers_up_to(bound)[1:]]


def format_reciprocal_table(table: list[tuple[int, FloatingDigits]]) -> str:
    """Two columns, ``igi <n in sexagesimal>  <reciprocal digits>``."""
    rows = [(format_sex(from_integer(n)), str(f)) for n, f in table]
    width = max((len(a) for a, _ in rows), default=0)
    return "\n".join(f"igi {a:<{width}}  {b}" for a, b in rows)
