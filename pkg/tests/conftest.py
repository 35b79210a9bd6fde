import sys
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from sexagesimal.numeral import SexNumber  # noqa: E402

# long repetends make single examples slow; wall-clock deadlines only add flakiness
settings.register_profile("default", deadline=None)
settings.load_profile("default")

digit = st.integers(0, 59)


@st.composite
def sex_numbers(draw, max_len=6):
    """Canonical SexNumbers built by normalizing arbitrary digit triples."""
    sign = draw(st.sampled_from([1, -1]))
    ints = draw(st.lists(digit, min_size=1, max_size=max_len))
    frac = draw(st.lists(digit, max_size=max_len))
    rep = draw(st.lists(digit, max_size=max_len))
    if rep and not any(rep):
        rep = []
    return SexNumber.normalized(sign, ints, frac, rep)


@st.composite
def fractions(draw, max_den=10**4, max_num=10**8):
    from fractions import Fraction

    den = draw(st.integers(1, max_den))
    num = draw(st.integers(-max_num, max_num))
    return Fraction(num, den)


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid and (
        report.when == "call" or report.outcome != "passed"
    ):
        _acceptance.append(report)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for rep in _acceptance:
        name = rep.nodeid.split("::test_criterion_", 1)[1]
        number, _, title = name.partition("_")
        status = "PASS" if rep.passed else "FAIL"
        terminalreporter.write_line(
            f"criterion {number}: {status}  {title.replace('_', ' ')}  ({rep.duration:.2f}s)"
        )
