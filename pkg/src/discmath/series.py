"""Formal power series as lazily computed, memoized coefficient streams.

Only finite prefixes can be observed (:func:`take`); two series are never
compared as wholes.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Sequence

from .errors import DomainError
from .exact import RationalLike, as_rational
from .polynomials import Polynomial

# Leading coefficients inspected when the divisor's constant term is zero.
DIVISION_PROBE_LIMIT = 64

Rule = Callable[[int, Sequence[Fraction]], RationalLike]


class PowerSeries:
    """Infinite coefficient stream.

    ``rule(n, prefix)`` produces coefficient ``n`` given the already
    computed coefficients ``prefix[:n]``. It is called once per index, in
    increasing order, so rules may carry state between calls.
    """

    __slots__ = ("_rule", "_cache", "_lock")

    def __init__(self, rule: Rule):
        self._rule = rule
        self._cache: list[Fraction] = []
        self._lock = threading.RLock()

    def coefficient(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError("negative coefficient index")
        with self._lock:
            cache = self._cache
            while len(cache) <= n:
                cache.append(as_rational(self._rule(len(cache), cache)))
            return cache[n]

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficient(n)

    def __iter__(self) -> Iterator[Fraction]:
        n = 0
        while True:
            yield self.coefficient(n)
            n += 1

    def take(self, n: int) -> list[Fraction]:
        return take(n, self)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.take(6))
        return f"PowerSeries([{shown}, ...])"

    def __add__(self, other):
        return series_arith("add", self, _lift(other))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(lambda n, _: -self.coefficient(n))

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        return series_arith("mul", self, _lift(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return series_div(self, _lift(other))

    def __rtruediv__(self, other):
        return series_div(_lift(other), self)


def _lift(x) -> PowerSeries:
    if isinstance(x, PowerSeries):
        return x
    if isinstance(x, Polynomial):
        return series_from_poly(x)
    return constant(x)


def series_from_poly(p: Polynomial) -> PowerSeries:
    coeffs = p.coefficients
    return PowerSeries(lambda n, _: coeffs[n] if n < len(coeffs) else 0)


def constant(c: RationalLike) -> PowerSeries:
    return series_from_poly(Polynomial([c]))


def zero() -> PowerSeries:
    return PowerSeries(lambda n, _: 0)


def one() -> PowerSeries:
    return constant(1)


def z() -> PowerSeries:
    return series_from_poly(Polynomial([0, 1]))


def take(n: int, s: PowerSeries) -> list[Fraction]:
    if n < 0:
        raise DomainError("take needs n >= 0")
    if n == 0:
        return []
    s.coefficient(n - 1)
    return [s.coefficient(i) for i in range(n)]


def series_arith(op: str, a: PowerSeries, b: PowerSeries) -> PowerSeries:
    if op == "add":
        return PowerSeries(lambda n, _: a.coefficient(n) + b.coefficient(n))
    if op == "mul":
        return PowerSeries(
            lambda n, _: sum((a.coefficient(k) * b.coefficient(n - k) for k in range(n + 1)), Fraction(0))
        )
    raise ValueError(f"unknown series operation {op!r}")


def shift_down(s: PowerSeries, k: int) -> PowerSeries:
    """Drop the first ``k`` coefficients (divide by ``z**k``)."""
    return PowerSeries(lambda n, _: s.coefficient(n + k))


def series_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Quotient ``a / b`` by the long-division recurrence.

    When ``b`` starts with ``k`` zero coefficients, ``a`` must too, and
    ``z**k`` is cancelled first; at most ``DIVISION_PROBE_LIMIT``
    coefficients are inspected to find ``k``.
    """
    k = next((i for i in range(DIVISION_PROBE_LIMIT) if b.coefficient(i) != 0), None)
    if k is None:
        raise DomainError(
            f"divisor has no nonzero coefficient among the first {DIVISION_PROBE_LIMIT}"
        )
    if k:
        lead = next((i for i in range(k) if a.coefficient(i) != 0), None)
        if lead is not None:
            raise DomainError(
                f"not a power series: divisor is divisible by z^{k} but the dividend is not"
            )
        a, b = shift_down(a, k), shift_down(b, k)

    b0 = b.coefficient(0)

    def rule(n, q):
        acc = a.coefficient(n)
        for j in range(1, n + 1):
            acc -= b.coefficient(j) * q[n - j]
        return acc / b0

    return PowerSeries(rule)


def derivative(s: PowerSeries) -> PowerSeries:
    return PowerSeries(lambda n, _: (n + 1) * s.coefficient(n + 1))


def integral(s: PowerSeries, c: RationalLike = 0) -> PowerSeries:
    c = as_rational(c)
    return PowerSeries(lambda n, _: c if n == 0 else s.coefficient(n - 1) / n)


def series_calculus(op: str, s: PowerSeries, c: RationalLike = 0) -> PowerSeries:
    if op == "derivative":
        return derivative(s)
    if op == "integral":
        return integral(s, c)
    raise ValueError(f"unknown calculus operation {op!r}")


def unfold_stream(seed: Any, step: Callable[[Any], tuple[RationalLike, Any]]) -> PowerSeries:
    """Corecursive stream: emit ``step(state)[0]``, continue from ``step(state)[1]``."""
    state = [seed]

    def rule(n, _):
        value, state[0] = step(state[0])
        return value

    return PowerSeries(rule)


def geometric() -> PowerSeries:
    return unfold_stream(None, lambda s: (1, s))


def naturals() -> PowerSeries:
    return unfold_stream(0, lambda s: (s, s + 1))


def fibonacci() -> PowerSeries:
    return unfold_stream((0, 1), lambda ab: (ab[0], (ab[1], ab[0] + ab[1])))


@dataclass(frozen=True)
class Process:
    """A process driven by integer decisions: ``step(state, d) -> (action, state)``."""

    step: Callable[[Any, int], tuple[int, Any]]
    initial: Any


def run_process(p: Process, decisions: Iterable[int]) -> list[int]:
    actions = []
    state = p.initial
    for d in decisions:
        action, state = p.step(state, d)
        actions.append(action)
    return actions
