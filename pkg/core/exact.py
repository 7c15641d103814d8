"""Exact base-2 logarithm bounds and power comparisons over big integers.

Every inequality of the form value <= 2^(c*n) is decided by cross-multiplied
integer arithmetic; floats only ever appear in display strings.
"""
from fractions import Fraction
from math import factorial

DEFAULT_PRECISION = 10_000


def _shift_le(x, y, k):
    # x <= y * 2^k
    if k >= 0:
        return x <= (y << k)
    return (x << -k) <= y


def _shift_ge(x, y, k):
    # x >= y * 2^k
    if k >= 0:
        return (y << k) <= x
    return y <= (x << -k)


def at_most_power_of_two(value, exponent, size=1):
    """Return True iff value <= 2^(exponent * size) exactly."""
    value = Fraction(value)
    if value <= 0:
        raise ValueError(f"value must be positive, got {value}")
    power = Fraction(exponent) * size
    p, q = power.numerator, power.denominator
    return _shift_le(value.numerator ** q, value.denominator ** q, p)


def lg_upper(value, precision=DEFAULT_PRECISION):
    """Smallest k/precision with value <= 2^(k/precision)."""
    value = Fraction(value)
    if value <= 0:
        raise ValueError(f"lg undefined for {value}")
    x = value.numerator ** precision
    y = value.denominator ** precision
    k = x.bit_length() - y.bit_length()
    while not _shift_le(x, y, k):
        k += 1
    while _shift_le(x, y, k - 1):
        k -= 1
    return Fraction(k, precision)


def lg_lower(value, precision=DEFAULT_PRECISION):
    """Largest k/precision with 2^(k/precision) <= value."""
    value = Fraction(value)
    if value <= 0:
        raise ValueError(f"lg undefined for {value}")
    x = value.numerator ** precision
    y = value.denominator ** precision
    k = x.bit_length() - y.bit_length()
    while not _shift_ge(x, y, k):
        k -= 1
    while _shift_ge(x, y, k + 1):
        k += 1
    return Fraction(k, precision)


def factorial_lg_bound(k, precision=DEFAULT_PRECISION):
    """Least multiple of 1/precision that is >= lg(k!)/k."""
    if k < 1:
        raise ValueError(f"degree must be positive, got {k}")
    power = factorial(k) ** precision
    bits = (power - 1).bit_length()
    return Fraction(-(-bits // k), precision)


def fraction_payload(value):
    value = Fraction(value)
    return {'numerator': value.numerator, 'denominator': value.denominator}


def describe_fraction(value, digits=4):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator} (~{float(value):.{digits}f})"
