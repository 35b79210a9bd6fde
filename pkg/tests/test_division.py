import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import sex_numbers
from oracles import sieve_factor, smallest_prime_factors
from sexagesimal.division import (
    Factorization,
    IrregularDivisorError,
    divide_by_regular,
    divmod_int,
    factorize,
    format_factorization,
    gcd_list,
)
from sexagesimal.numeral import from_integer, parse_sex
from sexagesimal.rational import rational_to_sex, sex_to_rational
from sexagesimal.regularity import regular_numbers_up_to


def test_divmod_examples():
    assert divmod_int(1152000, 7) == (164571, 3)
    assert divmod_int(12345, 1) == (12345, 0)
    assert divmod_int(780, 12) == (65, 0)


def test_divmod_rejects_zero_divisor():
    with pytest.raises(ZeroDivisionError):
        divmod_int(5, 0)


@given(st.integers(0, 10**30), st.integers(1, 10**12))
def test_divmod_reconstructs(n, d):
    q, r = divmod_int(n, d)
    assert d * q + r == n
    assert 0 <= r < d


@pytest.mark.parametrize(
    "n, d, expected",
    [("13,0", 12, "1,5"), ("7,35", 6, "1,15;50"), ("1,15;50", 1, "1,15;50"), ("1", 81, "0;0,44,26,40")],
)
def test_divide_by_regular(n, d, expected):
    assert divide_by_regular(parse_sex(n), d) == parse_sex(expected)


def test_divide_by_irregular_names_blocking_factor():
    with pytest.raises(IrregularDivisorError) as info:
        divide_by_regular(parse_sex("1,0"), 84)
    assert info.value.blocking == 7
    assert "7" in str(info.value)


def test_divide_rejects_repetend():
    with pytest.raises(ValueError):
        divide_by_regular(parse_sex("0;(8,34,17)"), 2)


_REGULAR = regular_numbers_up_to(10**4)


@given(sex_numbers(), st.sampled_from(_REGULAR))
def test_divide_by_regular_matches_rational_division(x, d):
    if x.repetend:
        x = rational_to_sex(Fraction(int(sex_to_rational(x))))
    y = divide_by_regular(x, d)
    assert y.is_terminating
    assert sex_to_rational(y) == sex_to_rational(x) / d


def test_gcd_examples():
    assert gcd_list([93450, 72625, 662704, 590625]) == 7
    assert gcd_list([0, 42]) == 42
    assert gcd_list([12, 18]) == 6
    assert gcd_list([5]) == 5


def test_gcd_all_zero():
    with pytest.raises(ValueError):
        gcd_list([0, 0])
    with pytest.raises(ValueError):
        gcd_list([])


@given(st.lists(st.integers(0, 10**9), min_size=1, max_size=6).filter(any), st.integers(1, 1000))
def test_gcd_invariances(ns, k):
    g = gcd_list(ns)
    assert all(n % g == 0 for n in ns)
    assert gcd_list(list(reversed(ns))) == g
    assert gcd_list(random.Random(k).sample(ns, len(ns))) == g
    assert gcd_list([k * n for n in ns]) == k * g


@given(st.lists(st.integers(1, 10**6), min_size=1, max_size=4))
def test_gcd_is_greatest(ns):
    g = gcd_list(ns)
    common = [d for d in range(1, min(ns) + 1) if all(n % d == 0 for n in ns)] if min(ns) < 5000 else [g]
    assert max(common) == g


@pytest.mark.parametrize(
    "n, factors",
    [
        (590625, ((3, 3), (5, 5), (7, 1))),
        (662704, ((2, 4), (7, 1), (61, 1), (97, 1))),
        (93450, ((2, 1), (3, 1), (5, 2), (7, 1), (89, 1))),
        (72625, ((5, 3), (7, 1), (83, 1))),
        (1, ()),
        (2, ((2, 1),)),
        (97, ((97, 1),)),
    ],
)
def test_factorize(n, factors):
    f = factorize(n)
    assert f.factors == factors
    assert f.complete and f.product() == n


def test_factorize_partial_when_limit_too_small():
    n = 1000003 * 1000033
    f = factorize(n, limit=1000)
    assert not f.complete
    assert f.cofactor == n and f.product() == n
    assert "unfactored" in format_factorization(f)
    g = factorize(2**5 * n, limit=1000)
    assert g.factors == ((2, 5),) and g.cofactor == n
    # both primes exceed the default limit of 10**6
    assert not factorize(n).complete
    assert factorize(n, limit=1000003).factors == ((1000003, 1), (1000033, 1))


def test_large_prime_cofactor_proven_by_trial_division():
    f = factorize(2 * 999983)
    assert f.complete and f.factors == ((2, 1), (999983, 1))


def test_format_factorization():
    assert format_factorization(factorize(93450)) == "2 × 3 × 5² × 7 × 89"
    assert format_factorization(factorize(93450), plain=True) == "2 × 3 × 5^2 × 7 × 89"
    assert format_factorization(factorize(590625)) == "3³ × 5⁵ × 7"
    assert format_factorization(factorize(1)) == "1"
    assert format_factorization(Factorization(2**12, ((2, 12),))) == "2¹²"


def test_factorize_against_sieve():
    bound = 20000
    spf = smallest_prime_factors(bound)
    for n in range(1, bound + 1):
        f = factorize(n)
        assert f.complete
        assert list(f.factors) == sieve_factor(n, spf)
