"""Integer division, division through reciprocals, GCD and factorization."""

from __future__ import annotations

from dataclasses import dataclass, field
from bisect import bisect_right
from math import isqrt
from typing import Iterable

from .numeral import SexNumber
from .rational import rational_to_sex, sex_to_rational
from .regularity import reciprocal, smooth_split

DEFAULT_FACTOR_LIMIT = 10**6

__all__ = [
    "DEFAULT_FACTOR_LIMIT",
    "Factorization",
    "IrregularDivisorError",
    "divide_by_regular",
    "divmod_int",
    "factorize",
    "format_factorization",
    "gcd",
    "gcd_list",
]


class IrregularDivisorError(ValueError):
    def __init__(self, d: int, blocking: int):
        super().__init__(
            f"{d} is not regular: factor {blocking} is coprime to 60, "
            f"so 1/{d} does not terminate"
        )
        self.divisor = d
        self.blocking = blocking


def divmod_int(n: int, d: int) -> tuple[int, int]:
    """Quotient and non-negative remainder, ``n == d*q + r`` with ``0 <= r < d``."""
    if d < 1:
        raise ZeroDivisionError("divisor must be a positive integer")
    if n < 0:
        raise ValueError("dividend must be non-negative")
    return divmod(n, d)


def divide_by_regular(n: SexNumber, d: int) -> SexNumber:
    """Divide by multiplying with the terminating reciprocal of ``d``.

    This is the scribal method: 13,0 divided by 12 is 13,0 times 0;5.
    """
    if n.repetend:
        raise ValueError(f"{n} does not terminate")
    if d < 1:
        raise ZeroDivisionError("divisor must be a positive integer")
    m = smooth_split(d).m
    if m != 1:
        raise IrregularDivisorError(d, m)
    return rational_to_sex(sex_to_rational(n) * sex_to_rational(reciprocal(d)))


def gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def gcd_list(ns: Iterable[int]) -> int:
    ns = list(ns)
    if not ns:
        raise ValueError("gcd of an empty list")
    if any(n < 0 for n in ns):
        raise ValueError("gcd_list expects non-negative integers")
    g = 0
    for n in ns:
        g = gcd(g, n)
    if g == 0:
        raise ValueError("gcd of all-zero list is undefined")
    return g


@dataclass(frozen=True)
class Factorization:
    """Prime powers in ascending order.

    ``cofactor`` is 1 for a complete factorization; otherwise it is the part
    trial division up to ``limit`` could not split or prove prime.
    """

    n: int
    factors: tuple[tuple[int, int], ...] = field(default_factory=tuple)
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def product(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out


_primes: list[int] = [2, 3, 5, 7]
_sieved_to = 10


def _primes_up_to(bound: int) -> list[int]:
    """Cached primes ``<= bound``, extended with a fresh sieve when needed."""
    global _primes, _sieved_to
    if bound > _sieved_to:
        top = max(bound, 2 * _sieved_to)
        sieve = bytearray([1]) * (top + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, isqrt(top) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytes(len(range(i * i, top + 1, i)))
        _primes = [i for i in range(top + 1) if sieve[i]]
        _sieved_to = top
    hi = bisect_right(_primes, bound)
    return _primes[:hi]


def factorize(n: int, limit: int = DEFAULT_FACTOR_LIMIT) -> Factorization:
    """Trial division by primes up to ``min(limit, sqrt(n))``.

    A cofactor with no prime divisor up to its square root is prime.  If
    ``limit`` stops the search first, the cofactor is returned unfactored.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors = []
    rest = n
    for p in _primes_up_to(min(limit, isqrt(n))):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
    if rest > 1 and isqrt(rest) <= limit:
        # no prime divisor up to sqrt(rest): rest is prime
        factors.append((rest, 1))
        rest = 1
    return Factorization(n, tuple(factors), rest)


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def format_factorization(f: Factorization, plain: bool = False) -> str:
    """``2 × 3 × 5² × 7 × 89``, or ``2 × 3 × 5^2 × 7 × 89`` when ``plain``."""
    if not f.factors and f.cofactor == 1:
        return "1"
    terms = []
    for p, e in f.factors:
        if e == 1:
            terms.append(str(p))
        elif plain:
            terms.append(f"{p}^{e}")
        else:
            terms.append(f"{p}{str(e).translate(_SUPERSCRIPT)}")
    if f.cofactor != 1:
        terms.append(f"[{f.cofactor} unfactored]")
    return " × ".join(terms)
