"""Propositional formulas: parsing, evaluation and truth-table decisions.

All decision procedures enumerate every valuation, so they work for any
number of atoms.
"""

from __future__ import annotations

import inspect
import re
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Mapping, Union

from .errors import DomainError, ParseError


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Constant:
    value: bool


@dataclass(frozen=True)
class Not:
    child: Formula


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff:
    left: Formula
    right: Formula


Formula = Union[Atom, Constant, Not, And, Or, Implies, Iff]
Valuation = Mapping[str, bool]

BINARY = (And, Or, Implies, Iff)


# -- parsing ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(<->|->|[~&|()])|([a-z][a-zA-Z0-9]*)|([TF])(?![a-zA-Z0-9]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("op", m.group(1), start))
        elif m.group(2):
            tokens.append(("ident", m.group(2), start))
        else:
            tokens.append(("const", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def accept(self, op):
        kind, value, _ = self.peek()
        if kind == "op" and value == op:
            self.i += 1
            return True
        return False

    def parse(self) -> Formula:
        f = self.iff()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {value!r}", pos)
        return f

    def iff(self):
        f = self.imp()
        while self.accept("<->"):
            f = Iff(f, self.imp())
        return f

    def imp(self):
        f = self.disj()
        if self.accept("->"):
            return Implies(f, self.imp())
        return f

    def disj(self):
        f = self.conj()
        while self.accept("|"):
            f = Or(f, self.conj())
        return f

    def conj(self):
        f = self.neg()
        while self.accept("&"):
            f = And(f, self.neg())
        return f

    def neg(self):
        if self.accept("~"):
            return Not(self.neg())
        return self.prim()

    def prim(self):
        kind, value, pos = self.peek()
        if kind == "ident":
            self.i += 1
            return Atom(value)
        if kind == "const":
            self.i += 1
            return Constant(value == "T")
        if self.accept("("):
            f = self.iff()
            if not self.accept(")"):
                kind, value, pos = self.peek()
                what = "end of input" if kind == "end" else repr(value)
                raise ParseError(f"expected ')' but found {what}", pos)
            return f
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected a formula but found {what}", pos)


def parse_formula(text: str) -> Formula:
    """Parse a formula; precedence ``~ & | -> <->``, ``->`` right-associative."""
    return _Parser(text).parse()


# -- semantics --------------------------------------------------------------

def atoms(f: Formula) -> list[str]:
    """Atom names in order of first occurrence (left to right)."""
    seen: dict[str, None] = {}

    def walk(g):
        if isinstance(g, Atom):
            seen.setdefault(g.name, None)
        elif isinstance(g, Not):
            walk(g.child)
        elif isinstance(g, BINARY):
            walk(g.left)
            walk(g.right)

    walk(f)
    return list(seen)


def evaluate(f: Formula, v: Valuation) -> bool:
    if isinstance(f, Atom):
        try:
            return bool(v[f.name])
        except KeyError:
            raise DomainError(f"{f.name} unbound") from None
    if isinstance(f, Constant):
        return f.value
    if isinstance(f, Not):
        return not evaluate(f.child, v)
    if isinstance(f, And):
        return evaluate(f.left, v) and evaluate(f.right, v)
    if isinstance(f, Or):
        return evaluate(f.left, v) or evaluate(f.right, v)
    if isinstance(f, Implies):
        return (not evaluate(f.left, v)) or evaluate(f.right, v)
    if isinstance(f, Iff):
        return evaluate(f.left, v) == evaluate(f.right, v)
    raise TypeError(f"not a formula: {f!r}")


def valuations(names: list[str]) -> Iterator[dict[str, bool]]:
    # True before False, first name varying slowest.
    for values in product((True, False), repeat=len(names)):
        yield dict(zip(names, values))


def truth_table(f: Formula) -> list[tuple[dict[str, bool], bool]]:
    return [(v, evaluate(f, v)) for v in valuations(atoms(f))]


def is_valid(f: Formula) -> bool:
    return all(evaluate(f, v) for v in valuations(atoms(f)))


def is_satisfiable(f: Formula) -> bool:
    return any(evaluate(f, v) for v in valuations(atoms(f)))


def is_contradiction(f: Formula) -> bool:
    return not is_satisfiable(f)


def are_equivalent(f: Formula, g: Formula) -> bool:
    names = list(dict.fromkeys(atoms(f) + atoms(g)))
    return all(evaluate(f, v) == evaluate(g, v) for v in valuations(names))


def valid(bf: Callable[..., bool] | bool, arity: int | None = None) -> bool:
    """Validity of a Boolean function of any arity.

    >>> valid(lambda p, q: (not p or q) or p)
    True
    """
    if arity is None:
        if isinstance(bf, bool):
            return bf
        arity = len(inspect.signature(bf).parameters)
    if arity == 0:
        return bool(bf() if callable(bf) else bf)
    return all(bf(*values) for values in product((True, False), repeat=arity))
