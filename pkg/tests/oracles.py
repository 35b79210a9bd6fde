"""Independent reference computations used to check the library.

None of these share code paths with the package under test.
"""

from fractions import Fraction
from math import floor


def expansion_digits(r: Fraction, count: int) -> list[int]:
    """First ``count`` base-60 fractional digits of |r|, by scaling and flooring."""
    r = abs(Fraction(r))
    return [floor(r * 60**i) % 60 for i in range(1, count + 1)]


def digit_stream(x, count: int) -> list[int]:
    """First ``count`` fractional digits of a SexNumber, repetend unrolled."""
    out = list(x.frac_prefix)
    while len(out) < count and x.repetend:
        out.extend(x.repetend)
    out += [0] * max(0, count - len(out))
    return out[:count]


def weighted_sum(int_digits) -> int:
    return sum(d * 60**i for i, d in enumerate(reversed(list(int_digits))))


def _totient(m: int) -> int:
    phi, rest, p = m, m, 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            phi -= phi // p
        p += 1
    if rest > 1:
        phi -= phi // rest
    return phi


def order_of_60(m: int) -> int:
    """Smallest t >= 1 with 60**t % m == 1, for m > 1 coprime to 60.

    Euler's theorem puts the order among the divisors of phi(m); test them
    in ascending order with pow.
    """
    phi = _totient(m)
    divisors = sorted({d for i in range(1, int(phi**0.5) + 1) if phi % i == 0 for d in (i, phi // i)})
    return next(t for t in divisors if pow(60, t, m) == 1)


def strip_smooth(n: int) -> tuple[int, int, int, int]:
    a = b = c = 0
    while n % 2 == 0:
        n, a = n // 2, a + 1
    while n % 3 == 0:
        n, b = n // 3, b + 1
    while n % 5 == 0:
        n, c = n // 5, c + 1
    return a, b, c, n


def brute_regular(bound: int) -> list[int]:
    return [n for n in range(1, bound + 1) if strip_smooth(n)[3] == 1]


def smallest_prime_factors(bound: int) -> list[int]:
    spf = list(range(bound + 1))
    i = 2
    while i * i <= bound:
        if spf[i] == i:
            for j in range(i * i, bound + 1, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    return spf


def sieve_factor(n: int, spf: list[int]) -> list[tuple[int, int]]:
    out: dict[int, int] = {}
    while n > 1:
        p = spf[n]
        out[p] = out.get(p, 0) + 1
        n //= p
    return sorted(out.items())
