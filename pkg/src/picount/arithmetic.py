"""Exact integer primitives: gcd, capped lcm, floor division, integer sqrt.

Everything here operates on plain Python ints, which never wrap silently.
Inputs are still range-checked against MAX_N so that a misconfigured caller
gets an error instead of an absurdly large computation.
"""

import math

# Largest n the package accepts.  Keeps every signed accumulator (including
# the compiled kernel's 64-bit ones) comfortably in range.
MAX_N = 2**62


class Exceeded:
    """Sticky marker for an lcm that went over its cap."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EXCEEDED"


EXCEEDED = Exceeded()


def check_natural(value, name="value", maximum=MAX_N):
    """Validate that value is a nonnegative int no larger than maximum."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    if value > maximum:
        raise OverflowError(f"{name}={value} exceeds the configured maximum {maximum}")
    return value


def gcd(a, b):
    """Greatest common divisor of two positive integers."""
    check_natural(a, "a")
    check_natural(b, "b")
    if a < 1 or b < 1:
        raise ValueError("gcd requires positive arguments")
    return math.gcd(a, b)


def lcm_capped(a, b, cap):
    """lcm(a, b) if it is <= cap, else the EXCEEDED marker.

    EXCEEDED is sticky: if either argument is already EXCEEDED the result is
    EXCEEDED.  The overflow-free test divides the cap instead of forming the
    product: (a/g)*b > cap  <=>  a/g > cap//b.
    """
    if a is EXCEEDED or b is EXCEEDED:
        return EXCEEDED
    check_natural(cap, "cap")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    g = gcd(a, b)
    q = a // g
    if q > cap // b:
        return EXCEEDED
    return q * b


def floor_div(a, b):
    """Floor of a / b for nonnegative a and positive b."""
    check_natural(a, "a")
    check_natural(b, "b")
    if b == 0:
        raise ZeroDivisionError("floor_div by zero")
    return a // b


def isqrt(n):
    """Exact integer square root: the unique r with r*r <= n < (r+1)*(r+1)."""
    check_natural(n, "n")
    return math.isqrt(n)
