"""Exact integers and rationals, primality, factorization, and a
diagonal enumeration of the rationals.

Rationals are :class:`fractions.Fraction` values, which already keep the
canonical form used everywhere here: positive denominator, numerator and
denominator coprime, zero as ``0/1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import count
from math import gcd, isqrt
from typing import Iterator, Union

from .errors import DomainError, ParseError

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def make_rational(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"expected int or Fraction, got {type(x).__name__}")
    return Fraction(x)


def rational_arith(op: str, a: RationalLike, b: RationalLike) -> Fraction:
    a, b = as_rational(a), as_rational(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DomainError("division by zero")
        return a / b
    raise ValueError(f"unknown rational operation {op!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p`` (optional leading ``-``) into lowest terms."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"malformed rational literal {text.strip()!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def format_rational(x: RationalLike) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def factorize(n: int) -> list[int]:
    """Prime factors of ``n`` in nondecreasing order, with multiplicity."""
    if n < 2:
        raise DomainError(f"cannot factorize {n}: need n >= 2")
    factors = []
    while n % 2 == 0:
        factors.append(2)
        n //= 2
    d = 3
    while d * d <= n:
        while n % d == 0:
            factors.append(d)
            n //= d
        d += 2
    if n > 1:
        factors.append(n)
    return factors


def primes_stream() -> Iterator[int]:
    """Yield 2, 3, 5, ... without bound.

    Each odd candidate is trial-divided by the primes found so far, up to
    its square root.
    """
    yield 2
    found = []
    for candidate in count(3, 2):
        for p in found:
            if p * p > candidate:
                found.append(candidate)
                yield candidate
                break
            if candidate % p == 0:
                break
        else:
            found.append(candidate)
            yield candidate


def enumerate_rationals() -> Iterator[Fraction]:
    """Every rational exactly once.

    Zero comes first; then diagonals ``p + q = 2, 3, ...`` are walked with
    ``p`` rising from 1, skipping pairs with a common factor, and each
    ``p/q`` is followed by its negation.
    """
    yield Fraction(0)
    for s in count(2):
        for p in range(1, s):
            q = s - p
            if gcd(p, q) == 1:
                yield Fraction(p, q)
                yield Fraction(-p, q)
