"""Exact rational scalars and the combinatorial primitives built on them.

``Rational`` is :class:`fractions.Fraction`: always reduced, positive
denominator, exact arithmetic, ``ZeroDivisionError`` on division by zero.
"""

import sys
from fractions import Fraction
from math import comb, factorial

from .errors import PoleError

Rational = Fraction

# numerators of B_n pass 4300 digits near n = 3000; exact output needs them whole
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


def as_rational(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError("cannot interpret %r as a rational" % (value,))


def parse_rational(text):
    """Parse the text form ``"p/q"`` or ``"p"``; surrounding whitespace allowed."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError("malformed rational %r" % text) from None
    if q == 0:
        raise ValueError("zero denominator in %r" % text)
    return Fraction(p, q)


def format_rational(q):
    """Text form ``"p/q"``, with ``/q`` omitted when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def binom_rational(z, k):
    """Generalized binomial coefficient z(z-1)...(z-k+1)/k!.

    Returns 1 for k == 0 and 0 for negative k.
    """
    if k < 0:
        return Fraction(0)
    z = as_rational(z)
    if z.denominator == 1 and z.numerator >= 0:
        return Fraction(_int_binom(z.numerator, k))
    prod = Fraction(1)
    for j in range(k):
        prod *= z - j
    return prod / factorial(k)


def _int_binom(n, k):
    return comb(n, k) if k <= n else 0


_HARMONIC = [Fraction(0)]


def harmonic(n):
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise ValueError("harmonic number needs n >= 0, got %d" % n)
    while len(_HARMONIC) <= n:
        _HARMONIC.append(_HARMONIC[-1] + Fraction(1, len(_HARMONIC)))
    return _HARMONIC[n]


def rising_reciprocal_sum(s, n):
    """Sum of 1/(s - l) for l = 0, ..., n-1."""
    s = as_rational(s)
    total = Fraction(0)
    for l in range(n):
        if s == l:
            raise PoleError("1/(s-%d) has a pole at s=%s" % (l, format_rational(s)))
        total += 1 / (s - l)
    return total
