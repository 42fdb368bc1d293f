import random

import pytest

from picount.arithmetic import (
    EXCEEDED,
    MAX_N,
    check_natural,
    floor_div,
    gcd,
    isqrt,
    lcm_capped,
)


@pytest.mark.parametrize("a,b,expected", [(4, 6, 2), (7, 7, 7), (12, 18, 6)])
def test_gcd_hand_cases(a, b, expected):
    assert gcd(a, b) == expected


def test_gcd_rejects_zero():
    with pytest.raises(ValueError):
        gcd(0, 5)
    with pytest.raises(ValueError):
        gcd(5, 0)


@pytest.mark.parametrize("a,b,cap,expected", [
    (2, 3, 11, 6),
    (4, 6, 11, EXCEEDED),
    (4, 6, 36, 12),
])
def test_lcm_capped_hand_cases(a, b, cap, expected):
    result = lcm_capped(a, b, cap)
    if expected is EXCEEDED:
        assert result is EXCEEDED
    else:
        assert result == expected


def test_lcm_exceeded_is_sticky():
    assert lcm_capped(EXCEEDED, 5, 100) is EXCEEDED
    assert lcm_capped(5, EXCEEDED, 100) is EXCEEDED
    assert lcm_capped(EXCEEDED, EXCEEDED, 100) is EXCEEDED


def test_gcd_lcm_product_identity():
    rng = random.Random(1)
    for _ in range(2000):
        a = rng.randint(1, 10**6)
        b = rng.randint(1, 10**6)
        lcm = lcm_capped(a, b, 10**13)
        assert lcm is not EXCEEDED
        assert gcd(a, b) * lcm == a * b


def test_lcm_exceeded_monotone_in_multiples():
    rng = random.Random(2)
    for _ in range(500):
        a = rng.randint(2, 10**4)
        b = rng.randint(2, 10**4)
        cap = rng.randint(1, a * b // gcd(a, b))
        if lcm_capped(a, b, cap) is EXCEEDED:
            for k in (2, 3, 7):
                assert lcm_capped(a * k, b, cap) is EXCEEDED


@pytest.mark.parametrize("a,b,expected", [(11, 6, 1), (8, 6, 1), (0, 5, 0)])
def test_floor_div_hand_cases(a, b, expected):
    assert floor_div(a, b) == expected


def test_floor_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        floor_div(3, 0)


@pytest.mark.parametrize("n,expected", [(11, 3), (36, 6), (0, 0)])
def test_isqrt_hand_cases(n, expected):
    assert isqrt(n) == expected


def test_isqrt_brackets_randomized():
    rng = random.Random(3)
    samples = [rng.randint(0, 10**9) for _ in range(5000)]
    samples += [k * k + d for k in (1, 10, 31623) for d in (-1, 0, 1) if k * k + d >= 0]
    for n in samples:
        r = isqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)


def test_inputs_beyond_maximum_error_out():
    with pytest.raises(OverflowError):
        check_natural(MAX_N + 1, "n")
    with pytest.raises(OverflowError):
        isqrt(MAX_N + 1)
    with pytest.raises(OverflowError):
        gcd(MAX_N + 1, 2)
    # at the boundary everything still works and is exact
    r = isqrt(MAX_N)
    assert r * r <= MAX_N < (r + 1) * (r + 1)


def test_negative_and_non_int_rejected():
    with pytest.raises(ValueError):
        check_natural(-1)
    with pytest.raises(TypeError):
        check_natural(1.5)
    with pytest.raises(TypeError):
        check_natural(True)
