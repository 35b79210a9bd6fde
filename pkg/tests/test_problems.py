from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sexagesimal.numeral import format_sex, parse_sex
from sexagesimal.problems import (
    StoneProblem,
    stone_check,
    stone_closed_form,
    stone_solve,
    verify,
    verify_ms3956,
    verify_shuruppak,
    verify_ybc4652,
)
from sexagesimal.rational import rational_to_sex, sex_to_rational


def test_ybc4652_instance():
    sol = stone_solve(StoneProblem((7, 13), 60))
    assert sol.weight == Fraction(455, 6)
    assert format_sex(rational_to_sex(sol.weight)) == "1,15;50"
    assert [format_sex(v) for _, v in sol.trace] == ["13,0", "1,5", "7,35", "1,15;50"]
    assert "0;5" in sol.trace[1][0] and "0;10" in sol.trace[3][0]
    assert "reconstruction" in sol.label


def test_no_steps():
    r = Fraction(17, 3)
    sol = stone_solve(StoneProblem((), r))
    assert sol.weight == r and sol.trace == ()
    assert stone_check(r, StoneProblem((), r)) == r


def test_single_step():
    sol = stone_solve(StoneProblem((7,), 60))
    assert sol.weight == 70
    assert format_sex(rational_to_sex(sol.weight)) == "1,10"
    assert stone_check(70, StoneProblem((7,), 60)) == 60
    assert stone_check(Fraction(455, 6), StoneProblem((7, 13), 60)) == 60


def test_irregular_divisor_is_noted():
    # undoing 1/8 divides by 7
    sol = stone_solve(StoneProblem((8,), 1))
    assert sol.weight == Fraction(8, 7)
    assert "irregular" in sol.trace[-1][0]
    assert sol.trace[-1][1] == parse_sex("1;(8,34,17)")


def test_non_terminating_value_is_noted():
    sol = stone_solve(StoneProblem((3,), Fraction(1, 7)))
    assert sol.weight == Fraction(3, 14)
    assert "non-terminating" in sol.trace[-1][0]


@pytest.mark.parametrize("steps, remainder", [((1,), 60), ((7, 0), 60), ((7,), 0), ((7,), -1)])
def test_invalid_problems(steps, remainder):
    with pytest.raises(ValueError):
        StoneProblem(steps, remainder)


def test_check_rejects_nonpositive_weight():
    with pytest.raises(ValueError):
        stone_check(0, StoneProblem((7,), 1))


problems = st.builds(
    StoneProblem,
    st.lists(st.integers(2, 30), max_size=4).map(tuple),
    st.fractions(min_value=Fraction(1, 1000), max_value=10**4, max_denominator=1000).filter(lambda f: f > 0),
)


@given(problems)
def test_solve_then_check(p):
    sol = stone_solve(p)
    assert stone_check(sol.weight, p) == p.remainder
    assert sol.weight == stone_closed_form(p)
    if sol.trace:
        assert sex_to_rational(sol.trace[-1][1]) == sol.weight


@given(problems)
def test_closed_form_independent(p):
    w = p.remainder
    for k in p.steps:
        w = w * k / (k - 1)
    assert stone_solve(p).weight == w


@pytest.mark.parametrize("fn", [verify_shuruppak, verify_ms3956, verify_ybc4652])
def test_reports_pass(fn):
    report = fn()
    assert report.passed, report.to_text()
    lines = report.to_text().splitlines()
    assert lines[0].startswith(report.name) and "PASS" in lines[0]
    assert len(lines) == 1 + len(report.checks)
    assert all("[PASS]" in line for line in lines[1:])
    data = report.to_json()
    assert data["passed"] is True and len(data["checks"]) == len(report.checks)


def test_shuruppak_values():
    r = verify_shuruppak()
    assert r.values["men"] == 164571
    assert r.values["remainder"] == 3
    assert format_sex(r.values["men_sex"]) == "45,42,51"


def test_ms3956_values():
    r = verify_ms3956()
    assert r.values["20,10,25"]["factorization"] == "5³ × 7 × 83"
    assert r.values["25,57,30"]["quotient_by_7"] == 13350


def test_verify_all_order():
    assert [r.name for r in verify()] == ["shuruppak", "ms3956", "ybc4652"]


def test_failed_check_reports_fail():
    from sexagesimal.problems import Report

    r = Report("x", "demo")
    r.check("ok", 1, 1)
    r.check("bad", 1, 2)
    assert not r.passed
    assert "[FAIL] bad: expected 1, got 2" in r.to_text()
