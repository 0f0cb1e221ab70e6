import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from discmath.errors import DomainError
from discmath.polynomials import (
    Polynomial,
    binomial,
    binomial_power,
    closed_form,
    degree_by_differences,
    difs,
    poly_arith,
    poly_compose,
    poly_derivative,
    poly_eval,
    solve_linear_system,
)
from oracles import cramer, index_difs, matvec, pascal

P = Polynomial
F = Fraction

small_rationals = st.builds(F, st.integers(-9, 9), st.integers(1, 4))
polys = st.lists(small_rationals, max_size=7).map(P)


def test_canonical_form():
    assert P([1, 2, 0, 0]).coefficients == (1, 2)
    assert P([0, 0]).coefficients == ()
    assert P([]).degree is None
    assert P([5]).degree == 0
    assert P([0, 0, 3]).degree == 2


def test_arith_examples():
    assert poly_arith("add", P([1, -1]), P([0, 1])) == P([1])
    assert poly_arith("mul", P([0, 1]), P([0, 1])) == P([0, 0, 1])
    assert poly_arith("mul", P([3, 4, 5]), P()) == P()
    assert poly_arith("neg", P([1, -2])) == P([-1, 2])
    assert poly_arith("scale", P([1, 2]), F(1, 2)) == P([F(1, 2), 1])
    assert poly_arith("scale", P([1, 2]), 0) == P()


def test_eval_examples():
    assert poly_eval(P([0, 0, 1]), 3) == 9
    assert poly_eval(P(), F(7, 3)) == 0
    assert poly_eval(P([1, 1]), F(1, 2)) == F(3, 2)


def test_compose_examples():
    assert poly_compose(P([0, 0, 1]), P([1, 1])) == P([1, 2, 1])
    p = P([3, F(-1, 2), 7])
    assert poly_compose(p, P([0, 1])) == p
    assert poly_compose(P([5]), P([1, 2, 3])) == P([5])


def test_derivative_examples():
    assert poly_derivative(P([1, 2, 1])) == P([2, 2])
    assert poly_derivative(P([4])) == P()
    assert poly_derivative(P()) == P()


@settings(max_examples=200)
@given(polys, polys, small_rationals)
def test_evaluation_is_a_ring_homomorphism(p, q, x):
    assert poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x)
    assert poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x)
    assert poly_eval(poly_compose(p, q), x) == poly_eval(p, poly_eval(q, x))


@settings(max_examples=200)
@given(polys, polys)
def test_derivative_rules(p, q):
    d = poly_derivative
    assert d(p + q) == d(p) + d(q)
    assert d(p * q) == d(p) * q + p * d(q)


@settings(max_examples=200)
@given(polys, polys, small_rationals)
def test_results_are_canonical(p, q, c):
    for r in (p + q, p - q, p * q, -p, p.scale(c), poly_compose(p, q), poly_derivative(p)):
        assert not r.coefficients or r.coefficients[-1] != 0


def test_binomial_power_examples():
    assert binomial_power(0) == P([1])
    assert binomial_power(2) == P([1, 2, 1])
    assert binomial_power(10).coefficients == (1, 10, 45, 120, 210, 252, 210, 120, 45, 10, 1)
    with pytest.raises(DomainError):
        binomial_power(-1)


@pytest.mark.parametrize("n", range(13))
def test_newton_consistency(n):
    expected = P([1])
    for _ in range(n):
        expected = expected * P([1, 1])
    assert binomial_power(n) == expected
    assert sum(binomial_power(n).coefficients) == 2**n
    assert [binomial(n, k) for k in range(n + 1)] == [pascal(n, k) for k in range(n + 1)]


def test_binomial_out_of_range():
    assert binomial(5, 6) == 0 and binomial(5, -1) == 0


def test_difs_examples():
    assert difs([]) == []
    assert difs([42]) == []
    assert difs([0, 1, 4, 9, 16]) == [1, 3, 5, 7]
    assert difs([5, 5, 5]) == [0, 0]


@given(st.lists(small_rationals, max_size=20))
def test_difs_length_and_oracle(xs):
    d = difs(xs)
    assert len(d) == max(len(xs) - 1, 0)
    assert d == index_difs(xs)


@settings(max_examples=100)
@given(polys.filter(lambda p: (p.degree or 0) >= 1), st.integers(0, 6))
def test_difs_lowers_degree(p, extra):
    d = p.degree
    samples = [poly_eval(p, i) for i in range(d + 2 + extra)]
    assert closed_form(difs(samples)).degree == d - 1


def test_degree_by_differences_examples():
    assert degree_by_differences([0, 1, 4, 9, 16, 25]) == 2
    assert degree_by_differences([7, 7, 7]) == 0
    assert degree_by_differences([0, 1, 4]) is None
    assert degree_by_differences([0, 1]) is None
    assert degree_by_differences([2, 2]) == 0
    with pytest.raises(DomainError, match="insufficient data"):
        degree_by_differences([1])


def test_solver_examples():
    b = [F(1, 2), 3, -4]
    ident = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert solve_linear_system(ident, b) == b
    assert solve_linear_system([[1, 1], [1, 2]], [3, 5]) == [1, 2]
    with pytest.raises(DomainError, match="singular system"):
        solve_linear_system([[1, 1], [2, 2]], [1, 2])
    with pytest.raises(DomainError):
        solve_linear_system([[1, 2, 3], [4, 5, 6]], [1, 2])


def test_solver_needs_row_swap():
    assert solve_linear_system([[0, 1], [1, 0]], [7, 9]) == [9, 7]


def random_invertible(rng, n):
    while True:
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        try:
            solve_linear_system(m, [0] * n)
            return m
        except DomainError:
            continue


@pytest.mark.parametrize("seed", range(20))
def test_solver_against_cramer(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    m = random_invertible(rng, n)
    b = [rng.randint(-20, 20) for _ in range(n)]
    x = solve_linear_system(m, b)
    assert matvec(m, x) == b
    assert x == cramer(m, b)


def test_closed_form_examples():
    assert closed_form([0, 1, 4, 9, 16, 25]) == P([0, 0, 1])
    assert closed_form([3, 3, 3]) == P([3])
    assert closed_form([0, 1, 2, 3, 4, 5]) == P([0, 1])
    assert closed_form([0, 0]) == P()
    assert closed_form([F(1, 2), F(3, 2), F(5, 2)]) == P([F(1, 2), 1])
    with pytest.raises(DomainError, match="sequence too short or not polynomial"):
        closed_form([0, 1, 4])


def test_closed_form_sum_of_squares():
    # 0, 1, 5, 14, 30, ... = n(n+1)(2n+1)/6 shifted to start at f(0) = 0
    seq = [sum(k * k for k in range(n + 1)) for n in range(8)]
    assert closed_form(seq) == P([0, F(1, 6), F(1, 2), F(1, 3)])


@settings(max_examples=100)
@given(polys)
def test_closed_form_round_trip(p):
    d = p.degree if p.degree is not None else 0
    samples = [poly_eval(p, i) for i in range(d + 3)]
    assert closed_form(samples) == p
