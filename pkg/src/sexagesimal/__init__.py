"""Exact base-60 arithmetic in transliterated Babylonian notation."""

from .division import (
    Factorization,
    IrregularDivisorError,
    divide_by_regular,
    divmod_int,
    factorize,
    format_factorization,
    gcd_list,
)
from .metrology import Quantity, convert, render_mixed
from .numeral import (
    FloatingDigits,
    ParseError,
    SexNumber,
    format_sex,
    from_floating,
    from_integer,
    parse_sex,
    to_floating,
)
from .problems import (
    StoneProblem,
    StoneSolution,
    stone_check,
    stone_solve,
    verify_ms3956,
    verify_shuruppak,
    verify_ybc4652,
)
from .rational import (
    Rational,
    rat_add,
    rat_div,
    rat_mul,
    rat_sub,
    rational_to_sex,
    sex_to_rational,
)
from .regularity import (
    PeriodGuardExceeded,
    SmoothSplit,
    is_regular,
    period_length,
    prefix_length,
    reciprocal,
    reciprocal_table,
    regular_numbers_up_to,
    smooth_split,
)

__version__ = "0.1.0"
