"""Polynomial rings, monomial orders and parsing."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from algtensor import GREVLEX, LEX, Ideal, Polynomial, Ring, block
from algtensor.errors import ParseError

R = Ring(("x", "y", "z"))

monomials = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(monomials, st.fractions(min_value=-5, max_value=5, max_denominator=4),
                        max_size=5).map(lambda d: Polynomial(R, d))


def test_parse_and_print():
    p = R.parse("x^2*y - 3/2*z + 1")
    assert p.to_string() == "x^2*y - 3/2*z + 1"
    assert R.parse("(x + y)^2") == R.parse("x^2 + 2*x*y + y^2")
    assert R.parse("x**2") == R.parse("x^2")


def test_parse_rejects_unknown_symbols():
    with pytest.raises(ParseError):
        R.parse("x + w")
    with pytest.raises(ParseError):
        R.parse("x +")


def test_zero_coefficients_dropped():
    p = Polynomial(R, {(1, 0, 0): 1, (0, 1, 0): 0})
    assert p.terms == {(1, 0, 0): Fraction(1)}
    assert (p - p).is_zero() and not (p - p)


def test_orders():
    x, y, z = R.gens
    # grevlex: x*z^2 vs y^3 same degree; grevlex prefers the smaller last exponent
    assert (x * z ** 2 + y ** 3).leading_monomial(GREVLEX) == (0, 3, 0)
    assert (x * z ** 2 + y ** 3).leading_monomial(LEX) == (1, 0, 2)
    # block(1): x dominates whatever the degree in y, z
    assert (x + y ** 5).leading_monomial(block(1)) == (1, 0, 0)
    assert (y * z + y ** 2).leading_monomial(block(1)) == (0, 2, 0)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p


@given(polys, st.tuples(*[st.fractions(min_value=-3, max_value=3, max_denominator=3)] * 3))
def test_evaluate_is_a_homomorphism(p, pt):
    assert (p * p).evaluate(pt) == p.evaluate(pt) ** 2


@given(polys)
def test_print_parse_round_trip(p):
    assert R.parse(p.to_string()) == p


@given(polys, polys)
def test_leading_monomial_is_multiplicative(p, q):
    if p.is_zero() or q.is_zero():
        return
    for order in (GREVLEX, LEX, block(2)):
        lm = tuple(a + b for a, b in zip(p.leading_monomial(order), q.leading_monomial(order)))
        assert (p * q).leading_monomial(order) == lm


def test_ideal_from_strings():
    I = Ideal.from_strings(["x", "y"], ["x^2", "x - y"])
    assert str(I) == "<x^2, x - y>"
    assert str(Ideal(Ring(("x",)), ())) == "<0>"
