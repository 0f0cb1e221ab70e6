"""Dense polynomials over the rationals and Babbage's difference method.

A polynomial is stored as its ascending coefficient tuple (index = power)
with trailing zeros stripped; the zero polynomial is the empty tuple and
has no degree.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import DomainError
from .exact import RationalLike, as_rational


class Polynomial:
    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        coeffs = [as_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def constant(cls, c: RationalLike) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, power: int, c: RationalLike = 1) -> Polynomial:
        return cls([0] * power + [c])

    @property
    def degree(self) -> Optional[int]:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coefficients) - 1 if self.coefficients else None

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, power: int) -> Fraction:
        if power < 0:
            raise IndexError("negative power")
        if power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __len__(self):
        return len(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self.coefficients)}])"

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self), len(other))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative polynomial power")
        result = Polynomial([1])
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c: RationalLike) -> Polynomial:
        c = as_rational(c)
        return Polynomial(c * a for a in self.coefficients)

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)


def _lift(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    return Polynomial([as_rational(p)])


def poly_arith(op: str, a: Polynomial, b: Union[Polynomial, RationalLike, None] = None) -> Polynomial:
    if op == "add":
        return a + _lift(b)
    if op == "neg":
        return -a
    if op == "scale":
        return a.scale(b)
    if op == "mul":
        return a * _lift(b)
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def poly_compose(outer: Polynomial, inner: Polynomial) -> Polynomial:
    """Coefficients of ``outer(inner(z))``, by Horner's scheme over polynomials."""
    acc = Polynomial()
    for c in reversed(outer.coefficients):
        acc = acc * inner + Polynomial([c])
    return acc


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial(i * c for i, c in enumerate(p.coefficients) if i > 0)


def binomial(n: int, k: int) -> int:
    """``C(n, k)`` computed row by row from Pascal's rule."""
    if n < 0:
        raise DomainError("binomial needs n >= 0")
    if k < 0 or k > n:
        return 0
    return pascal_row(n)[k]


def pascal_row(n: int) -> list[int]:
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def binomial_power(n: int) -> Polynomial:
    """Expansion of ``(z + 1)**n``; coefficient ``k`` is ``C(n, k)``."""
    if n < 0:
        raise DomainError(f"binomial_power needs n >= 0, got {n}")
    return Polynomial(binomial(n, k) for k in range(n + 1))


# -- difference method ------------------------------------------------------

def difs(terms: Sequence[RationalLike]) -> list:
    """Consecutive differences ``[n - m for each adjacent m, n]``."""
    return [n - m for m, n in zip(terms, terms[1:])]


def _is_constant(terms) -> bool:
    return all(t == terms[0] for t in terms)


def degree_by_differences(terms: Sequence[RationalLike]) -> Optional[int]:
    """Number of ``difs`` steps until a constant run of length >= 2 appears.

    ``None`` when the sequence shrinks below two terms first.
    """
    if len(terms) < 2:
        raise DomainError("insufficient data")
    current = list(terms)
    d = 0
    while len(current) >= 2:
        if _is_constant(current):
            return d
        current = difs(current)
        d += 1
    return None


def solve_linear_system(matrix: Sequence[Sequence[RationalLike]], rhs: Sequence[RationalLike]) -> list[Fraction]:
    """Exact Gaussian elimination with back substitution for a square system."""
    n = len(matrix)
    if len(rhs) != n:
        raise DomainError("right-hand side length does not match the number of rows")
    if any(len(row) != n for row in matrix):
        raise DomainError("matrix must be square")
    rows = [[as_rational(a) for a in row] + [as_rational(b)] for row, b in zip(matrix, rhs)]

    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise DomainError("singular system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] / p
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]

    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        s = rows[i][n] - sum(rows[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / rows[i][i]
    return x


def vandermonde(points: Iterable[RationalLike], size: int) -> list[list[Fraction]]:
    return [[as_rational(x) ** j for j in range(size)] for x in points]


def fits(p: Polynomial, terms: Sequence[RationalLike]) -> bool:
    """Whether ``p(i) == terms[i]`` for every index."""
    return all(poly_eval(p, i) == t for i, t in enumerate(terms))


def closed_form(terms: Sequence[RationalLike]) -> Polynomial:
    """Recover the polynomial ``f`` with ``f(i) == terms[i]``.

    The degree comes from difference analysis; the coefficients from the
    Vandermonde system at ``0..degree``.
    """
    d = degree_by_differences(terms)
    if d is None:
        raise DomainError("sequence too short or not polynomial")
    coeffs = solve_linear_system(vandermonde(range(d + 1), d + 1), list(terms[: d + 1]))
    f = Polynomial(coeffs)
    if not fits(f, terms):
        raise DomainError("recovered polynomial does not reproduce the sequence")
    return f
