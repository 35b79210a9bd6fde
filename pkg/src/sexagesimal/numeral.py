"""Transliterated sexagesimal notation.

Digits are written as decimal numerals 0..59 separated by commas, with a
semicolon as the radix point: ``45,42,51``, ``1,15;50``, ``0;30``.  A
recurring block is written in parentheses at the end, so 1/7 is
``0;(8,34,17)`` and 1/14 is ``0;4,(17,8,34)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import gmpy2

BASE = 60

__all__ = [
    "BASE",
    "FloatingDigits",
    "ParseError",
    "SexNumber",
    "digits_to_int",
    "format_sex",
    "from_floating",
    "from_integer",
    "int_to_digits",
    "parse_sex",
    "to_floating",
]


class ParseError(ValueError):
    """Malformed sexagesimal literal; ``position`` is a 0-based index into ``text``."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.reason = message
        self.text = text
        self.position = position

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.position}^ {self.reason}"


# gmpy2 reads and writes base 60 with this alphabet; used for long digit strings
_ALPHABET = b"0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwx"
_TO_CHARS = bytes.maketrans(bytes(range(BASE)), _ALPHABET)
_FROM_CHARS = bytes.maketrans(_ALPHABET, bytes(range(BASE)))
_SHORT = 24


def digits_to_int(digits: Iterable[int]) -> int:
    digits = bytes(digits)
    if len(digits) > _SHORT:
        return int(gmpy2.mpz(digits.translate(_TO_CHARS).decode("ascii"), BASE))
    n = 0
    for d in digits:
        n = n * BASE + d
    return n


def int_to_digits(n: int) -> list[int]:
    """Base-60 digits of ``n >= 0``, most significant first; ``[0]`` for zero."""
    if n < 0:
        raise ValueError("int_to_digits expects a non-negative integer")
    if n >= BASE**_SHORT:
        return list(gmpy2.digits(n, BASE).encode("ascii").translate(_FROM_CHARS))
    if n == 0:
        return [0]
    out = []
    while n:
        n, d = divmod(n, BASE)
        out.append(d)
    out.reverse()
    return out


def _check_digits(name: str, digits: Sequence[int]) -> None:
    for d in digits:
        if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d < BASE:
            raise ValueError(f"{name} digit {d!r} is not in 0..59")


def _minimal_period(rep: list[int]) -> list[int]:
    n = len(rep)
    for p in range(1, n + 1):
        if n % p == 0 and rep == rep[:p] * (n // p):
            return rep[:p]
    return rep


def _normalize(sign, int_digits, frac_prefix, repetend):
    """Return the canonical ``(sign, int, frac, rep)`` tuple for the same value."""
    ints = list(int_digits)
    frac = list(frac_prefix)
    rep = list(repetend)
    if rep and not any(rep):
        rep = []
    if rep:
        rep = _minimal_period(rep)
        # pull the repetend as far left as it will go
        while frac and frac[-1] == rep[-1]:
            rep = [rep[-1]] + rep[:-1]
            frac.pop()
        if all(d == BASE - 1 for d in rep):
            # x;...(59) equals the prefix rounded up by one unit in its last place
            rep = []
            units = digits_to_int(ints + frac) + 1
            width = len(frac)
            all_digits = int_to_digits(units)
            if width:
                all_digits = [0] * max(0, width + 1 - len(all_digits)) + all_digits
                ints, frac = all_digits[:-width], all_digits[-width:]
            else:
                ints, frac = all_digits, []
    if not rep:
        while frac and frac[-1] == 0:
            frac.pop()
    while len(ints) > 1 and ints[0] == 0:
        ints.pop(0)
    if not ints:
        ints = [0]
    if ints == [0] and not frac and not rep:
        sign = 1
    return sign, tuple(ints), tuple(frac), tuple(rep)


@dataclass(frozen=True)
class SexNumber:
    """Exact sexagesimal expansion in canonical form.

    The value is ``sign * (int_digits ; frac_prefix, repetend repeated forever)``.
    The constructor rejects non-canonical digit triples; use
    :meth:`normalized` to build from arbitrary digits.
    """

    sign: int
    int_digits: tuple[int, ...]
    frac_prefix: tuple[int, ...] = ()
    repetend: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("int_digits", "frac_prefix", "repetend"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if not self.int_digits:
            raise ValueError("int_digits must not be empty")
        _check_digits("integer", self.int_digits)
        _check_digits("fraction", self.frac_prefix)
        _check_digits("repetend", self.repetend)
        if self.repetend and not any(self.repetend):
            raise ValueError("repetend must not be all zeros")
        canon = _normalize(self.sign, self.int_digits, self.frac_prefix, self.repetend)
        if canon != (self.sign, self.int_digits, self.frac_prefix, self.repetend):
            raise ValueError(
                f"non-canonical digits; canonical form is {SexNumber(*canon)}"
            )

    @classmethod
    def normalized(cls, sign=1, int_digits=(0,), frac_prefix=(), repetend=()) -> "SexNumber":
        ints = list(int_digits) or [0]
        _check_digits("integer", ints)
        _check_digits("fraction", frac_prefix)
        _check_digits("repetend", repetend)
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        return cls._trusted(*_normalize(sign, ints, frac_prefix, repetend))

    @classmethod
    def _trusted(cls, sign, int_digits, frac_prefix, repetend) -> "SexNumber":
        # for producers whose output is canonical by construction (long division)
        self = object.__new__(cls)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "int_digits", tuple(int_digits))
        object.__setattr__(self, "frac_prefix", tuple(frac_prefix))
        object.__setattr__(self, "repetend", tuple(repetend))
        return self

    @classmethod
    def zero(cls) -> "SexNumber":
        return cls(1, (0,))

    @property
    def is_terminating(self) -> bool:
        return not self.repetend

    @property
    def is_integer(self) -> bool:
        return not self.frac_prefix and not self.repetend

    @property
    def is_zero(self) -> bool:
        return self.int_digits == (0,) and self.is_integer

    @property
    def period(self) -> int:
        return len(self.repetend)

    def __neg__(self) -> "SexNumber":
        if self.is_zero:
            return self
        return SexNumber(-self.sign, self.int_digits, self.frac_prefix, self.repetend)

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.sign * digits_to_int(self.int_digits)

    def __str__(self) -> str:
        return format_sex(self)

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "int_digits": list(self.int_digits),
            "frac_prefix": list(self.frac_prefix),
            "repetend": list(self.repetend),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SexNumber":
        return cls(obj["sign"], obj["int_digits"], obj["frac_prefix"], obj["repetend"])


# --- parsing ---------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message: str, pos: int | None = None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def digit(self) -> int:
        start = self.pos
        while self.peek().isdigit() and self.peek().isascii():
            self.pos += 1
        token = self.text[start:self.pos]
        if not token:
            ch = self.peek()
            if ch in ("", ",", ";", ")"):
                self.fail("empty digit token")
            self.fail(f"unexpected character {ch!r}")
        value = int(token)
        if value >= BASE:
            self.fail(f"digit {value} is not in 0..59", start)
        return value

    def comma(self) -> bool:
        if self.peek() != ",":
            return False
        self.pos += 1
        if self.peek() == " ":
            self.pos += 1
        return True

    def digit_list(self, allow_repetend: bool):
        digits = [self.digit()]
        while self.comma():
            if allow_repetend and self.peek() == "(":
                return digits, self.repetend()
            digits.append(self.digit())
        return digits, []

    def repetend(self) -> list[int]:
        open_pos = self.pos
        self.pos += 1  # "("
        digits, _ = self.digit_list(allow_repetend=False)
        if self.peek() != ")":
            self.fail("expected ')' to close repetend")
        self.pos += 1
        if not any(digits):
            self.fail("repetend of all zeros", open_pos)
        if self.pos != len(self.text):
            self.fail("repetend must end the literal")
        return digits


def parse_sex(text: str) -> SexNumber:
    """Parse a literal such as ``"-1,15;50"`` or ``"0;4,(17,8,34)"``.

    The result is normalized, so ``"0;8,34,17,(8,34,17)"`` and
    ``"0;(8,34,17)"`` parse to the same value.  Errors raise
    :class:`ParseError` carrying the offending character position.
    """
    sc = _Scanner(text)
    sign = 1
    if sc.peek() == "-":
        sign = -1
        sc.pos += 1
    ints, rep = sc.digit_list(allow_repetend=False)
    frac: list[int] = []
    if sc.peek() == ";":
        sc.pos += 1
        if sc.peek() == "(":
            rep = sc.repetend()
        else:
            frac, rep = sc.digit_list(allow_repetend=True)
    if sc.pos != len(text):
        sc.fail(f"unexpected character {sc.peek()!r}")
    return SexNumber.normalized(sign, ints, frac, rep)


def format_sex(x: SexNumber, unrolled: int | None = None) -> str:
    """Render ``x`` in transliteration style.

    By default the repetend is parenthesized, which ``parse_sex`` reads
    back exactly.  ``unrolled=k`` writes the repetend out ``k`` times and
    appends ``",..."``; that form is for display only.
    """
    out = "-" if x.sign < 0 else ""
    out += ",".join(map(str, x.int_digits))
    if not x.frac_prefix and not x.repetend:
        return out
    out += ";"
    if unrolled is not None and x.repetend:
        if unrolled < 1:
            raise ValueError("unrolled repetition count must be >= 1")
        return out + ",".join(map(str, x.frac_prefix + x.repetend * unrolled)) + ",..."
    out += ",".join(map(str, x.frac_prefix))
    if x.repetend:
        if x.frac_prefix:
            out += ","
        out += "(" + ",".join(map(str, x.repetend)) + ")"
    return out


# --- floating (radix-point-free) form ---------------------------------------


@dataclass(frozen=True)
class FloatingDigits:
    """Digits with no radix point plus the power of 60 carried by the last digit.

    ``value = sign * digits_to_int(digits) * 60**exponent``.  Zero is
    ``([0], 0)``.
    """

    digits: tuple[int, ...]
    exponent: int
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        _check_digits("floating", self.digits)
        if not self.digits:
            raise ValueError("digits must not be empty")
        if self.digits == (0,):
            if self.exponent != 0 or self.sign != 1:
                raise ValueError("zero is represented only as ([0], 0)")
        elif self.digits[0] == 0 or self.digits[-1] == 0:
            raise ValueError("first and last floating digits must be nonzero")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    def __str__(self) -> str:
        return ",".join(map(str, self.digits))


def to_floating(x: SexNumber) -> FloatingDigits:
    if x.repetend:
        raise ValueError(f"{x} does not terminate and has no floating form")
    if x.is_zero:
        return FloatingDigits((0,), 0)
    digits = list(x.int_digits + x.frac_prefix)
    exponent = -len(x.frac_prefix)
    while digits[-1] == 0:
        digits.pop()
        exponent += 1
    while digits[0] == 0:
        digits.pop(0)
    return FloatingDigits(tuple(digits), exponent, x.sign)


def from_floating(f: FloatingDigits) -> SexNumber:
    digits = list(f.digits)
    if f.exponent >= 0:
        return SexNumber.normalized(f.sign, digits + [0] * f.exponent)
    k = -f.exponent
    if len(digits) <= k:
        digits = [0] * (k - len(digits) + 1) + digits
    return SexNumber.normalized(f.sign, digits[:-k], digits[-k:])


def from_integer(n: int) -> SexNumber:
    return SexNumber(-1 if n < 0 else 1, tuple(int_to_digits(abs(n))))
