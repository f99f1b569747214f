"""Arbitrary-precision rationals.

The package uses ``gmpy2.mpq`` throughout: it is always reduced with a positive
denominator, which is exactly the canonical form we need, and it is an order of
magnitude faster than ``fractions.Fraction`` on the long Newton lifts.
"""
from fractions import Fraction

from gmpy2 import gcd, mpq, mpz

Rational = type(mpq(0))

ZERO = mpq(0)
ONE = mpq(1)


def Q(value, den=None):
    """Coerce ``value`` (int, str "p/q", Fraction, mpq) to a reduced rational."""
    if den is not None:
        return mpq(Q(value), Q(den))
    if isinstance(value, Rational):
        return value
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(value.strip().replace(" ", ""))
    if isinstance(value, float):
        raise TypeError("refusing to build an exact rational from a float")
    return mpq(value)


def to_str(q):
    """Render as "p/q" (or "p" when integral); the JSON wire form."""
    q = Q(q)
    if q.denominator == 1:
        return str(int(q.numerator))
    return f"{int(q.numerator)}/{int(q.denominator)}"


def to_fraction(q):
    q = Q(q)
    return Fraction(int(q.numerator), int(q.denominator))


def lcm_of_denominators(values):
    out = mpz(1)
    for v in values:
        d = Q(v).denominator
        if d != 1:
            out = out * d // gcd(out, d)
    return out
