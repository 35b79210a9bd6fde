"""The three tablet computations, each checked exactly.

* an Early Dynastic Shuruppak exercise: 1 guru of barley shared among men
  at 7 sila each;
* MS 3956: four numbers whose common divisor is 7;
* YBC 4652 no. 8: a stone loses 1/7 and then 1/13 of its weight and
  weighs 1 ma-na; find the original weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import metrology
from .division import divide_by_regular, divmod_int, factorize, format_factorization, gcd_list
from .numeral import SexNumber, format_sex, from_integer, parse_sex
from .rational import rational_to_json, rational_to_sex, sex_to_rational
from .regularity import is_regular, period_length, reciprocal

TRACE_LABEL = "reconstruction of the scribal elimination; the tablet states only the answer"


# --- stone problems ---------------------------------------------------------


@dataclass(frozen=True)
class StoneProblem:
    """Subtract ``1/k`` of the current weight for each ``k`` in ``steps``; ``remainder`` is what is left (gín)."""

    steps: tuple[int, ...]
    remainder: Fraction

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "remainder", Fraction(self.remainder))
        bad = [k for k in self.steps if k < 2]
        if bad:
            raise ValueError(f"each step must subtract 1/k with k >= 2, got {bad}")
        if self.remainder <= 0:
            raise ValueError("remainder must be positive")


@dataclass(frozen=True)
class StoneSolution:
    weight: Fraction
    trace: tuple[tuple[str, SexNumber], ...]
    label: str = TRACE_LABEL


def stone_solve(p: StoneProblem) -> StoneSolution:
    """Undo the subtractions, the last one first.

    For a step ``w -> w - w/k``, multiply by ``k`` (giving ``(k-1) w``) and
    then divide by ``k - 1``.  When ``k - 1`` is regular and the value
    terminates the division is a multiplication by its reciprocal, as on
    the tablets; otherwise it falls back to exact rational division and
    the trace says so.
    """
    value = p.remainder
    trace: list[tuple[str, SexNumber]] = []
    for k in reversed(p.steps):
        value *= k
        trace.append((f"multiply by {k}", rational_to_sex(value)))
        d = k - 1
        current = rational_to_sex(value)
        if d == 1:
            trace.append(("divide by 1", current))
            continue
        if is_regular(d) and current.is_terminating:
            quotient = divide_by_regular(current, d)
            desc = f"divide by {d} (times 1/{d} = {format_sex(reciprocal(d))})"
        else:
            quotient = rational_to_sex(value / d)
            why = "irregular divisor" if not is_regular(d) else "non-terminating value"
            desc = f"divide by {d} ({why}; exact rational division)"
        value = sex_to_rational(quotient)
        trace.append((desc, quotient))
    return StoneSolution(value, tuple(trace))


def stone_check(weight: Fraction, p: StoneProblem) -> Fraction:
    w = Fraction(weight)
    if w <= 0:
        raise ValueError("weight must be positive")
    for k in p.steps:
        w -= w / k
    return w


def stone_closed_form(p: StoneProblem) -> Fraction:
    w = p.remainder
    for k in p.steps:
        w *= Fraction(k, k - 1)
    return w


# --- reports ------------------------------------------------------------------


def _show(v: Any) -> str:
    if isinstance(v, SexNumber):
        return format_sex(v)
    return str(v)


def _encode(v: Any) -> Any:
    if isinstance(v, SexNumber):
        return {"sexagesimal": format_sex(v), **v.to_json()}
    if isinstance(v, Fraction):
        return rational_to_json(v)
    if isinstance(v, (list, tuple)):
        return [_encode(x) for x in v]
    return v


@dataclass(frozen=True)
class Check:
    label: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"  [{status}] {self.label}: expected {_show(self.expected)}, got {_show(self.actual)}"


@dataclass
class Report:
    name: str
    title: str
    checks: list[Check] = field(default_factory=list)
    values: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, label: str, expected: Any, actual: Any) -> None:
        self.checks.append(Check(label, expected, actual))

    def to_text(self) -> str:
        head = f"{self.name}: {'PASS' if self.passed else 'FAIL'} ({self.title})"
        return "\n".join([head] + [c.to_text() for c in self.checks])

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "title": self.title,
            "passed": self.passed,
            "checks": [
                {
                    "label": c.label,
                    "expected": _encode(c.expected),
                    "actual": _encode(c.actual),
                    "passed": c.passed,
                }
                for c in self.checks
            ],
            "values": {k: _encode(v) for k, v in self.values.items()},
        }


def verify_shuruppak() -> Report:
    r = Report("shuruppak", "1 guru of barley, 7 sila per man")
    barley = metrology.convert(metrology.Quantity(1, "guru"), "sila").magnitude
    r.check("1 guru in sila", 1152000, barley)
    r.check("1 guru in sila (sexagesimal)", "5,20,0,0", format_sex(rational_to_sex(barley)))
    q, rem = divmod_int(int(barley), 7)
    r.check("men", 164571, q)
    r.check("men (sexagesimal)", "45,42,51", format_sex(from_integer(q)))
    r.check("sila left over", 3, rem)
    r.check("7 × 45,42,51 + 3", "5,20,0,0", format_sex(from_integer(7 * q + rem)))
    r.check("7 is regular", False, is_regular(7))
    r.check("period of 1/7", 3, period_length(7))
    r.check("1/7", "0;(8,34,17)", format_sex(reciprocal(7)))
    r.values.update(
        barley_sila=int(barley),
        men=q,
        men_sex=from_integer(q),
        remainder=rem,
        reciprocal_of_7=reciprocal(7),
    )
    return r


MS3956_NUMBERS = ("25,57,30", "20,10,25", "3,4,5,4", "2,44,3,45")
MS3956_FACTORS = (
    "2 × 3 × 5² × 7 × 89",
    "5³ × 7 × 83",
    "2⁴ × 7 × 61 × 97",
    "3³ × 5⁵ × 7",
)


def verify_ms3956() -> Report:
    r = Report("ms3956", "four numbers with greatest common divisor 7")
    values = [int(parse_sex(t)) for t in MS3956_NUMBERS]
    r.check("gcd of the four numbers", 7, gcd_list(values))
    for text, n, expected in zip(MS3956_NUMBERS, values, MS3956_FACTORS):
        f = factorize(n)
        r.check(f"{text} = {n}", expected, format_factorization(f))
        r.check(f"{text} fully factored", True, f.complete)
        q, rem = divmod_int(n, 7)
        r.check(f"{text} / 7 leaves", 0, rem)
        r.values[text] = {
            "decimal": n,
            "factorization": format_factorization(f),
            "quotient_by_7": q,
        }
    r.check("25,57,30 / 7", 13350, divmod_int(values[0], 7)[0])
    return r


def verify_ybc4652() -> Report:
    r = Report("ybc4652", "stone problem no. 8: less 1/7, less 1/13, weighs 1 ma-na")
    one_mana = metrology.convert(metrology.Quantity(1, "mana"), "gin").magnitude
    problem = StoneProblem((7, 13), one_mana)
    sol = stone_solve(problem)
    r.check("weight (gín)", Fraction(455, 6), sol.weight)
    r.check("weight (sexagesimal)", "1,15;50", format_sex(rational_to_sex(sol.weight)))
    r.check(
        "weight (mixed)",
        "1 ma-na 15 5/6 gín",
        metrology.render_mixed(metrology.Quantity(sol.weight, "gin")),
    )
    expected_trace = ["13,0", "1,5", "7,35", "1,15;50"]
    r.check("trace", expected_trace, [format_sex(v) for _, v in sol.trace])
    r.check("forward check (gín)", one_mana, stone_check(sol.weight, problem))
    r.check("closed form", stone_closed_form(problem), sol.weight)
    r.values.update(
        weight=sol.weight,
        trace=[{"step": d, "value": _encode(v)} for d, v in sol.trace],
        trace_label=sol.label,
    )
    return r


VERIFIERS = {
    "shuruppak": verify_shuruppak,
    "ms3956": verify_ms3956,
    "ybc4652": verify_ybc4652,
}


def verify(names: Sequence[str] | None = None) -> list[Report]:
    return [VERIFIERS[n]() for n in (names or VERIFIERS)]
