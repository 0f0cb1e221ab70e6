
import pytest
from hypothesis import given, settings, strategies as st

from discmath.errors import DomainError
from discmath.finite import (
    FiniteFunction,
    FiniteSet,
    Relation,
    closure,
    compose,
    function_algebra,
    function_query,
    identity_relation,
    image,
    invert,
    is_left_inverse,
    powerset,
    quotient,
    relation_properties,
    set_ops,
)
from oracles import injective_all_pairs, reachability


def S(*xs):
    return FiniteSet(xs)


def test_finite_set_is_canonical():
    assert S(3, 1, 2, 1).elements == (1, 2, 3)
    assert S("b", "a") == S("a", "b")
    assert repr(S(1, 2)) == "{1, 2}"


def test_set_ops():
    assert set_ops("union", S(1, 2), S(2, 3)) == S(1, 2, 3)
    assert set_ops("intersection", S(1, 2), S(2, 3)) == S(2)
    assert set_ops("difference", S(1, 2), S(2, 3)) == S(1)
    assert set_ops("subset", S(), S(1)) is True
    assert set_ops("subset", S(1, 4), S(1)) is False
    assert set_ops("member", S(1, 2), 2) is True
    assert set_ops("member", S(1, 2), "2") is False
    assert set_ops("product", S(1, 2), S("a")) == FiniteSet([(1, "a"), (2, "a")])


def test_powerset():
    assert powerset(S()) == FiniteSet([S()])
    assert list(powerset(S(1, 2))) == [S(), S(1), S(2), S(1, 2)]
    assert list(powerset(S(1, 2, 3)))[4:] == [S(1, 2), S(1, 3), S(2, 3), S(1, 2, 3)]
    assert len(powerset(FiniteSet(range(10)))) == 1024
    with pytest.raises(DomainError):
        powerset(FiniteSet(range(21)))


def test_relation_rejects_foreign_pairs():
    with pytest.raises(DomainError):
        Relation([1, 2], [(1, 3)])


def test_properties_identity():
    props = relation_properties(identity_relation([1, 2, 3]))
    assert props.reflexive and props.symmetric and props.antisymmetric
    assert props.transitive and props.equivalence and not props.irreflexive


def test_properties_empty_and_chain():
    empty = relation_properties(Relation([1, 2], []))
    assert not empty.reflexive and empty.transitive and empty.irreflexive
    chain = relation_properties(Relation([1, 2, 3], [(1, 2), (2, 3)]))
    assert not chain.transitive and chain.antisymmetric and not chain.symmetric


def test_closures():
    r = Relation([1, 2, 3], [(1, 2), (2, 3)])
    assert closure("transitive", r).pairs == FiniteSet([(1, 2), (2, 3), (1, 3)])
    assert closure("reflexive", r).pairs == FiniteSet([(1, 1), (2, 2), (3, 3), (1, 2), (2, 3)])
    assert closure("symmetric", r).pairs == FiniteSet([(1, 2), (2, 1), (2, 3), (3, 2)])
    t = closure("transitive", r)
    assert closure("transitive", t) == t


def test_quotient():
    assert quotient(identity_relation([1, 2])) == FiniteSet([S(1), S(2)])
    total = Relation([1, 2, 3], [(a, b) for a in (1, 2, 3) for b in (1, 2, 3)])
    assert quotient(total) == FiniteSet([S(1, 2, 3)])
    mod2 = Relation(range(6), [(a, b) for a in range(6) for b in range(6) if (a - b) % 2 == 0])
    assert quotient(mod2) == FiniteSet([S(0, 2, 4), S(1, 3, 5)])
    with pytest.raises(DomainError, match="symmetric"):
        quotient(Relation([1, 2], [(1, 1), (2, 2), (1, 2)]))


def relations(max_size=7):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_size))
        dom = list(range(n))
        pairs = draw(st.sets(st.tuples(st.sampled_from(dom), st.sampled_from(dom))))
        return Relation(dom, pairs)

    return build()


def brute_closure(kind, r):
    # Least superset with the property: grow one violation at a time.
    pairs = set(r.pairs)
    while True:
        missing = set()
        if kind == "reflexive":
            missing = {(x, x) for x in r.domain} - pairs
        elif kind == "symmetric":
            missing = {(b, a) for (a, b) in pairs} - pairs
        else:
            missing = {(a, d) for (a, b) in pairs for (c, d) in pairs if b == c} - pairs
        if not missing:
            return pairs
        pairs |= missing


@settings(max_examples=150)
@given(relations(), st.sampled_from(["reflexive", "symmetric", "transitive"]))
def test_closure_properties(r, kind):
    c = closure(kind, r)
    assert r.pairs.issubset(c.pairs)
    assert getattr(relation_properties(c), kind)
    assert set(c.pairs) == brute_closure(kind, r)
    if kind == "transitive":
        assert set(c.pairs) == reachability(list(r.domain), list(r.pairs))


@settings(max_examples=150)
@given(relations())
def test_quotient_partitions(r):
    eq = closure("transitive", closure("symmetric", closure("reflexive", r)))
    classes = list(quotient(eq))
    assert all(len(c) > 0 for c in classes)
    for i, a in enumerate(classes):
        for b in classes[i + 1:]:
            assert len(a & b) == 0
    union = FiniteSet(x for c in classes for x in c)
    assert union == r.domain


def square(x):
    return x * x


def test_function_queries():
    f = FiniteFunction.from_callable(square, [0, 1, 2], [0, 1, 4])
    assert function_query("injective", f) and function_query("surjective", f)
    g = FiniteFunction.from_callable(square, [-1, 0, 1], [0, 1])
    assert not function_query("injective", g)
    assert function_query("surjective", g)
    assert function_query("bijective", FiniteFunction.identity(["a", "b", "c"]))
    assert not function_query("surjective", FiniteFunction.from_callable(square, [0, 1], [0, 1, 4]))


def test_function_validation():
    with pytest.raises(DomainError):
        FiniteFunction([1, 2], [1], {1: 1})
    with pytest.raises(DomainError):
        FiniteFunction([1], [1], {1: 2})


def test_function_algebra():
    ident = FiniteFunction.identity([1, 2, 3])
    assert invert(ident) == ident
    f = FiniteFunction([1, 2, 3], ["a", "b", "c"], {1: "b", 2: "c", 3: "a"})
    assert is_left_inverse(invert(f), f)
    assert function_algebra("is_left_inverse", invert(f), f)
    assert is_left_inverse(f, invert(f))
    assert function_algebra("image", f) == S("a", "b", "c")
    assert image(f, [1]) == S("b")
    g = FiniteFunction.from_callable(square, [1, 2], [1, 4])
    with pytest.raises(DomainError):
        compose(g, f)
    with pytest.raises(DomainError):
        invert(FiniteFunction.from_callable(square, [-1, 1], [1]))
    h = FiniteFunction.from_callable(lambda x: x + 1, [0, 1], [1, 2])
    assert compose(g, h).table == {0: 1, 1: 4}


def test_left_inverse_of_encoding():
    # decoding a character after encoding it gives the character back
    letters = "abcdef"
    to_code = FiniteFunction.from_callable(ord, letters, [ord(c) for c in letters])
    from_code = FiniteFunction.from_callable(chr, [ord(c) for c in letters], letters)
    assert is_left_inverse(from_code, to_code)
    assert is_left_inverse(to_code, from_code)


@st.composite
def functions(draw, max_size=6):
    n = draw(st.integers(1, max_size))
    m = draw(st.integers(1, max_size))
    dom, cod = list(range(n)), list(range(100, 100 + m))
    values = draw(st.lists(st.sampled_from(cod), min_size=n, max_size=n))
    return FiniteFunction(dom, cod, dict(zip(dom, values)))


@st.composite
def bijections(draw, max_size=7):
    n = draw(st.integers(1, max_size))
    perm = draw(st.permutations(list(range(n))))
    return FiniteFunction(range(n), range(n), dict(enumerate(perm)))


@settings(max_examples=200)
@given(functions())
def test_injective_matches_all_pairs(f):
    assert function_query("injective", f) == injective_all_pairs(f.domain, f.table)


@settings(max_examples=100)
@given(bijections())
def test_bijection_inverse(f):
    assert function_query("bijective", f)
    assert compose(invert(f), f) == FiniteFunction.identity(f.domain)


@settings(max_examples=100)
@given(functions())
def test_non_bijection_cannot_be_undone(f):
    if not function_query("bijective", f):
        with pytest.raises(DomainError):
            invert(f)


@settings(max_examples=100)
@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_composition_preserves_injectivity_and_surjectivity(n, rng):
    a = list(range(n))
    b = list(range(10, 10 + n + rng.randrange(3)))
    c = list(range(30, 30 + len(b) + rng.randrange(3)))
    f = FiniteFunction(a, b, dict(zip(a, rng.sample(b, n))))
    g = FiniteFunction(b, c, dict(zip(b, rng.sample(c, len(b)))))
    assert function_query("injective", compose(g, f))
    # surjections between sets of equal size
    p = FiniteFunction(a, a, dict(zip(a, rng.sample(a, n))))
    q = FiniteFunction(a, a, dict(zip(a, rng.sample(a, n))))
    assert function_query("surjective", compose(q, p))
