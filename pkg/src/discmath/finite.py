"""Finite sets, binary relations on a declared domain, and finite functions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Iterable, Iterator, Mapping

from .errors import DomainError

POWERSET_LIMIT = 20


def _key(x):
    # Total order across the element universe: ints < strings < pairs < sets.
    if isinstance(x, bool):
        raise TypeError("booleans are not set elements")
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(_key(e) for e in x))
    if isinstance(x, FiniteSet):
        return (3, len(x), tuple(_key(e) for e in x))
    raise TypeError(f"unsupported set element {x!r}")


class FiniteSet:
    """Immutable set stored as a strictly increasing tuple."""

    __slots__ = ("_elements", "_keys")

    def __init__(self, elements: Iterable[Any] = ()):
        unique = {}
        for e in elements:
            unique[_key(e)] = e
        self._elements = tuple(unique[k] for k in sorted(unique))
        self._keys = frozenset(unique)

    @property
    def elements(self) -> tuple:
        return self._elements

    def __iter__(self) -> Iterator:
        return iter(self._elements)

    def __len__(self):
        return len(self._elements)

    def __contains__(self, x):
        try:
            k = _key(x)
        except TypeError:
            return False
        return k in self._keys

    def __eq__(self, other):
        if not isinstance(other, FiniteSet):
            return NotImplemented
        return self._elements == other._elements

    def __hash__(self):
        return hash(self._elements)

    def __lt__(self, other):
        return _key(self) < _key(other)

    def __repr__(self):
        return "{" + ", ".join(_show(e) for e in self._elements) + "}"

    def union(self, other: FiniteSet) -> FiniteSet:
        return FiniteSet(self._elements + other._elements)

    def intersection(self, other: FiniteSet) -> FiniteSet:
        return FiniteSet(e for e in self._elements if e in other)

    def difference(self, other: FiniteSet) -> FiniteSet:
        return FiniteSet(e for e in self._elements if e not in other)

    def issubset(self, other: FiniteSet) -> bool:
        return all(e in other for e in self._elements)

    def product(self, other: FiniteSet) -> FiniteSet:
        return FiniteSet((a, b) for a in self._elements for b in other._elements)

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset


def _show(e):
    if isinstance(e, tuple):
        return "(" + ", ".join(_show(x) for x in e) + ")"
    return repr(e) if isinstance(e, str) else str(e)


def set_ops(op: str, a: FiniteSet, b):
    if op == "member":
        return b in a
    if op == "union":
        return a.union(b)
    if op == "intersection":
        return a.intersection(b)
    if op == "difference":
        return a.difference(b)
    if op == "subset":
        return a.issubset(b)
    if op == "product":
        return a.product(b)
    raise ValueError(f"unknown set operation {op!r}")


def powerset(a: FiniteSet) -> FiniteSet:
    """All subsets of ``a``, ordered by size, then lexicographically."""
    if len(a) > POWERSET_LIMIT:
        raise DomainError(f"powerset of a {len(a)}-element set exceeds the limit of {POWERSET_LIMIT}")
    return FiniteSet(
        FiniteSet(c) for k in range(len(a) + 1) for c in combinations(a.elements, k)
    )


# -- relations --------------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    domain: FiniteSet
    pairs: FiniteSet

    def __init__(self, domain: Iterable, pairs: Iterable = ()):
        domain = domain if isinstance(domain, FiniteSet) else FiniteSet(domain)
        pairs = pairs if isinstance(pairs, FiniteSet) else FiniteSet(tuple(p) for p in pairs)
        for p in pairs:
            if not (isinstance(p, tuple) and len(p) == 2):
                raise DomainError(f"{p!r} is not an ordered pair")
            a, b = p
            if a not in domain or b not in domain:
                raise DomainError(f"pair {_show(p)} leaves the domain {domain!r}")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "pairs", pairs)

    def __contains__(self, pair):
        return pair in self.pairs

    def __repr__(self):
        return f"{self.pairs!r} on {self.domain!r}"


@dataclass(frozen=True)
class RelationProperties:
    reflexive: bool
    irreflexive: bool
    symmetric: bool
    antisymmetric: bool
    transitive: bool
    equivalence: bool


def identity_relation(domain: Iterable) -> Relation:
    domain = FiniteSet(domain)
    return Relation(domain, ((x, x) for x in domain))


def compose_relations(r: Relation, s: Relation) -> Relation:
    """``{(a, c) : (a, b) in r, (b, c) in s}`` on ``r``'s domain."""
    return Relation(
        r.domain,
        ((a, c) for (a, b) in r.pairs for (b2, c) in s.pairs if b == b2),
    )


def relation_properties(r: Relation) -> RelationProperties:
    pairs = set(r.pairs)
    reflexive = all((x, x) in pairs for x in r.domain)
    irreflexive = all((x, x) not in pairs for x in r.domain)
    symmetric = all((b, a) in pairs for (a, b) in pairs)
    antisymmetric = all(a == b or (b, a) not in pairs for (a, b) in pairs)
    transitive = all(
        (a, d) in pairs for (a, b) in pairs for (c, d) in pairs if b == c
    )
    return RelationProperties(
        reflexive=reflexive,
        irreflexive=irreflexive,
        symmetric=symmetric,
        antisymmetric=antisymmetric,
        transitive=transitive,
        equivalence=reflexive and symmetric and transitive,
    )


def closure(kind: str, r: Relation) -> Relation:
    if kind == "reflexive":
        return Relation(r.domain, r.pairs.union(identity_relation(r.domain).pairs))
    if kind == "symmetric":
        return Relation(r.domain, r.pairs.union(FiniteSet((b, a) for (a, b) in r.pairs)))
    if kind == "transitive":
        current = r
        while True:
            step = Relation(r.domain, current.pairs.union(compose_relations(current, r).pairs))
            if step == current:
                return current
            current = step
    raise ValueError(f"unknown closure kind {kind!r}")


def quotient(r: Relation) -> FiniteSet:
    """Equivalence classes of ``r``."""
    props = relation_properties(r)
    for name in ("reflexive", "symmetric", "transitive"):
        if not getattr(props, name):
            raise DomainError(f"not an equivalence relation: not {name}")
    return FiniteSet(FiniteSet(y for y in r.domain if (x, y) in r.pairs) for x in r.domain)


# -- functions --------------------------------------------------------------

class FiniteFunction:
    """A total function between two finite sets, given by its table."""

    __slots__ = ("domain", "codomain", "_table")

    def __init__(self, domain: Iterable, codomain: Iterable, table: Mapping):
        self.domain = FiniteSet(domain)
        self.codomain = FiniteSet(codomain)
        for x in self.domain:
            if x not in table:
                raise DomainError(f"function undefined at {_show(x)}")
            if table[x] not in self.codomain:
                raise DomainError(f"value {_show(table[x])} at {_show(x)} is outside the codomain")
        self._table = {x: table[x] for x in self.domain}

    @classmethod
    def from_callable(cls, fn: Callable, domain: Iterable, codomain: Iterable) -> FiniteFunction:
        domain = FiniteSet(domain)
        return cls(domain, codomain, {x: fn(x) for x in domain})

    @classmethod
    def identity(cls, domain: Iterable) -> FiniteFunction:
        domain = FiniteSet(domain)
        return cls(domain, domain, {x: x for x in domain})

    @property
    def table(self) -> dict:
        return dict(self._table)

    def __call__(self, x):
        try:
            return self._table[x]
        except KeyError:
            raise DomainError(f"{_show(x)} is not in the domain") from None

    def __eq__(self, other):
        if not isinstance(other, FiniteFunction):
            return NotImplemented
        return (self.domain, self.codomain, self._table) == (other.domain, other.codomain, other._table)

    def __hash__(self):
        return hash((self.domain, self.codomain))

    def __repr__(self):
        body = ", ".join(f"{_show(x)} -> {_show(y)}" for x, y in self._table.items())
        return f"FiniteFunction({{{body}}}, codomain={self.codomain!r})"


def image(f: FiniteFunction, xs: Iterable | None = None) -> FiniteSet:
    xs = f.domain if xs is None else xs
    return FiniteSet(f(x) for x in xs)


def is_injective(f: FiniteFunction) -> bool:
    # f x must not occur among the images of the remaining elements.
    xs = list(f.domain)
    while xs:
        x, rest = xs[0], xs[1:]
        if f(x) in image(f, rest):
            return False
        xs = rest
    return True


def is_surjective(f: FiniteFunction) -> bool:
    return image(f) == f.codomain


def function_query(q: str, f: FiniteFunction) -> bool:
    if q == "injective":
        return is_injective(f)
    if q == "surjective":
        return is_surjective(f)
    if q == "bijective":
        return is_injective(f) and is_surjective(f)
    raise ValueError(f"unknown function query {q!r}")


def compose(g: FiniteFunction, f: FiniteFunction) -> FiniteFunction:
    """``x -> g(f(x))``; needs ``f``'s codomain inside ``g``'s domain."""
    if not f.codomain.issubset(g.domain):
        raise DomainError("cannot compose: codomain of the inner function is not inside the outer domain")
    return FiniteFunction(f.domain, g.codomain, {x: g(f(x)) for x in f.domain})


def invert(f: FiniteFunction) -> FiniteFunction:
    if not function_query("bijective", f):
        raise DomainError("cannot invert a function that is not bijective")
    return FiniteFunction(f.codomain, f.domain, {y: x for x, y in f.table.items()})


def is_left_inverse(g: FiniteFunction, f: FiniteFunction) -> bool:
    return all(f(x) in g.domain and g(f(x)) == x for x in f.domain)


def function_algebra(op: str, *args):
    if op == "compose":
        return compose(*args)
    if op == "invert":
        return invert(*args)
    if op == "image":
        return image(*args)
    if op == "is_left_inverse":
        return is_left_inverse(*args)
    raise ValueError(f"unknown function operation {op!r}")
