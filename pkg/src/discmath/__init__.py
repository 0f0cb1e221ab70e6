"""Exact discrete mathematics: rationals, logic, finite structures,
polynomials with the difference method, and lazy power series."""

from .errors import DomainError, ParseError
from .exact import (
    enumerate_rationals,
    factorize,
    format_rational,
    is_prime,
    make_rational,
    parse_rational,
    primes_stream,
    rational_arith,
)
from .polynomials import Polynomial, closed_form, degree_by_differences, difs, solve_linear_system
from .series import PowerSeries, take

__version__ = "0.1.0"
