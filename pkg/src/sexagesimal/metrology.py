"""Sumerian capacity and weight units with exact ratios.

Only the four units needed for the tablet exercises are defined.  A sila
is roughly a litre and a gin (shekel) roughly 8.3 g; those figures are
informational and never enter a computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# unit -> (dimension, size in the dimension's base unit)
UNITS: dict[str, tuple[str, int]] = {
    "sila": ("capacity", 1),
    "guru": ("capacity", 5 * 60**3 + 20 * 60**2),  # 5,20,0,0 sila
    "gin": ("weight", 1),
    "mana": ("weight", 60),
}

DISPLAY = {"sila": "sìla", "guru": "guru₇", "gin": "gín", "mana": "ma-na"}

ALIASES = {
    "sìla": "sila",
    "guru7": "guru",
    "guru₇": "guru",
    "gín": "gin",
    "shekel": "gin",
    "ma-na": "mana",
    "mina": "mana",
}


class DimensionError(ValueError):
    pass


def unit_name(name: str) -> str:
    key = name.strip().lower()
    key = ALIASES.get(key, key)
    if key not in UNITS:
        raise ValueError(f"unknown unit {name!r}; expected one of {', '.join(UNITS)}")
    return key


@dataclass(frozen=True)
class Quantity:
    magnitude: Fraction
    unit: str

    def __post_init__(self):
        object.__setattr__(self, "magnitude", Fraction(self.magnitude))
        object.__setattr__(self, "unit", unit_name(self.unit))
        if self.magnitude < 0:
            raise ValueError("metrological quantities are non-negative")

    @property
    def dimension(self) -> str:
        return UNITS[self.unit][0]

    def __str__(self) -> str:
        return f"{self.magnitude} {DISPLAY[self.unit]}"


def convert(q: Quantity, target: str) -> Quantity:
    target = unit_name(target)
    src_dim, src_size = UNITS[q.unit]
    dst_dim, dst_size = UNITS[target]
    if src_dim != dst_dim:
        raise DimensionError(f"cannot convert {src_dim} ({q.unit}) to {dst_dim} ({target})")
    return Quantity(q.magnitude * src_size / dst_size, target)


def render_mixed(q: Quantity) -> str:
    """Whole ma-na followed by the remaining gín, e.g. ``1 ma-na 15 5/6 gín``."""
    if q.dimension != "weight":
        raise DimensionError(f"{q.unit} is not a weight unit")
    gin = convert(q, "gin").magnitude
    mana, rest = divmod(gin, 60)
    mana = int(mana)
    whole = int(rest)
    part = rest - whole
    parts = []
    if mana:
        parts.append(f"{mana} ma-na")
    gin_terms = []
    if whole:
        gin_terms.append(str(whole))
    if part:
        gin_terms.append(f"{part.numerator}/{part.denominator}")
    if gin_terms:
        parts.append(" ".join(gin_terms) + " gín")
    return " ".join(parts) or "0 gín"


def parse_mixed(text: str) -> Quantity:
    """Inverse of :func:`render_mixed`; returns the weight in gín."""
    words = text.split()
    total = Fraction(0)
    try:
        if len(words) >= 2 and words[1] == "ma-na":
            total += 60 * int(words[0])
            words = words[2:]
        if words:
            if words[-1] != "gín" or len(words) not in (2, 3):
                raise ValueError
            for w in words[:-1]:
                num, slash, den = w.partition("/")
                total += Fraction(int(num), int(den)) if slash else int(num)
        elif not text.strip():
            raise ValueError
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a mixed weight: {text!r}") from None
    return Quantity(total, "gin")
