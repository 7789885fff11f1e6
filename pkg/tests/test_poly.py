import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bracketdec.errors import ParseError, StepBudgetExceeded
from bracketdec.poly import (
    MonomialOrder,
    Poly,
    StepBudget,
    antiderivative,
    apply_derivation,
    divide_multivariate,
    gcd_univariate,
    parse_poly,
    partial_derivative,
)

LEX = MonomialOrder.LEX
GRLEX = MonomialOrder.GRLEX

_coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=8)
_monos = st.tuples(st.integers(0, 4), st.integers(0, 3), st.integers(0, 2))
polys = st.lists(st.tuples(_monos, _coeffs), max_size=6).map(Poly)


# -- construction and formatting --------------------------------------------

def test_zero_and_one():
    assert Poly.zero().is_zero()
    assert str(Poly.zero()) == "0"
    assert Poly.one().as_constant() == 1
    assert Poly([((0, 0, 0), 2), ((0, 0, 0), -2)]).is_zero()


def test_terms_are_canonical():
    p = Poly([((1, 0, 0), 1), ((0, 2, 0), 1), ((3, 0, 0), -1)])
    # descending lex with z, then y, then x: y^2 before x^3 before x
    assert [m for m, _ in p.terms] == [(0, 2, 0), (3, 0, 0), (1, 0, 0)]
    assert str(p) == "y^2 - x^3 + x"


def test_parse_basic():
    p = parse_poly("y^2 - x^3 - x")
    assert p == Poly([((0, 2, 0), 1), ((3, 0, 0), -1), ((1, 0, 0), -1)])
    assert parse_poly("3/2*x^2 + 1").coefficient((2, 0, 0)) == Fraction(3, 2)
    assert parse_poly("2xy") == parse_poly("2*x*y")
    assert parse_poly("x^2y^3") == parse_poly("x^2 * y^3")
    assert parse_poly("(x+1)(x-1)") == parse_poly("x^2 - 1")
    assert parse_poly("1/2x") == parse_poly("x") * Fraction(1, 2)
    assert parse_poly("-x") == -Poly.variable("x")
    assert parse_poly("0").is_zero()


def test_parse_unicode_minus():
    assert parse_poly("y^2 − x") == parse_poly("y^2 - x")


@pytest.mark.parametrize("bad", ["", "w", "x^", "x^-1", "3/0", "(x", "x )", "1//2", "x / 2"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_poly(bad)


def test_format_round_trip_random(rand_poly):
    rng = random.Random(7001)
    for _ in range(200):
        p = rand_poly(rng, variables=("x", "y", "z"), max_degree=5)
        assert parse_poly(str(p)) == p


# -- arithmetic --------------------------------------------------------------

@settings(max_examples=60)
@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + Poly.zero() == p
    assert p * Poly.one() == p
    assert p - p == Poly.zero()


def test_scalar_arithmetic():
    x = Poly.variable("x")
    assert 2 * x + x == 3 * x
    assert x * Fraction(1, 2) + x * Fraction(1, 2) == x
    assert (x + 1) - 1 == x
    assert Poly.constant(3) == 3
    with pytest.raises(TypeError):
        x * 0.5


def test_pow():
    x = Poly.variable("x")
    assert (x + 1) ** 2 == x * x + 2 * x + 1
    assert (x + 1) ** 0 == Poly.one()
    with pytest.raises(ValueError):
        x ** -1


def test_hash_eq():
    a = parse_poly("x + y")
    b = parse_poly("y + x")
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1


# -- orders and leading terms -------------------------------------------------

def test_leading_terms_by_order():
    p = parse_poly("y^2 - x^3 - x")
    assert p.leading_monomial(LEX) == (0, 2, 0)
    # grlex weighs total degree first, so x^3 wins
    assert p.leading_monomial(GRLEX) == (3, 0, 0)
    q = parse_poly("z - x^3")
    assert q.leading_monomial(LEX) == (0, 0, 1)


def test_leading_term_of_zero_raises():
    with pytest.raises(ValueError):
        Poly.zero().leading_term(LEX)


def test_degrees_and_variables():
    p = parse_poly("x^2*y + z")
    assert p.total_degree() == 3
    assert p.degree_in("x") == 2
    assert p.variables() == frozenset({"x", "y", "z"})
    assert p.uses_only(("x", "y", "z"))
    assert not p.uses_only(("x", "y"))
    assert Poly.zero().total_degree() == -1


# -- calculus -----------------------------------------------------------------

def test_partial_derivative_examples():
    assert partial_derivative(parse_poly("x^3 + x"), "x") == parse_poly("3x^2 + 1")
    assert partial_derivative(parse_poly("y^2 - x^3 - x"), "y") == parse_poly("2y")
    assert partial_derivative(parse_poly("x^2"), "y").is_zero()


def test_antiderivative_examples():
    assert antiderivative(parse_poly("x^2"), "x") == parse_poly("1/3*x^3")
    assert antiderivative(Poly.zero(), "x").is_zero()
    assert antiderivative(parse_poly("y"), "x") == parse_poly("x*y")


def test_antiderivative_inverts_derivative(rand_poly):
    rng = random.Random(7002)
    for _ in range(300):
        p = rand_poly(rng, variables=("x", "y", "z"), max_degree=6)
        assert partial_derivative(antiderivative(p, "x"), "x") == p


@settings(max_examples=60)
@given(polys, polys)
def test_leibniz(p, q):
    for var in ("x", "y", "z"):
        lhs = partial_derivative(p * q, var)
        rhs = partial_derivative(p, var) * q + p * partial_derivative(q, var)
        assert lhs == rhs


def test_apply_derivation_two_components():
    p = parse_poly("y^2 - x^3 - x")
    comps = (parse_poly("2y"), parse_poly("3x^2 + 1"))
    expected = comps[0] * parse_poly("-3x^2 - 1") + comps[1] * parse_poly("2y")
    assert apply_derivation(comps, p) == expected


# -- division -----------------------------------------------------------------

def test_divide_examples():
    qs, rem = divide_multivariate(parse_poly("y^2"), [parse_poly("y^2 - x^3 - x")])
    assert [str(q) for q in qs] == ["1"]
    assert rem == parse_poly("x^3 + x")
    qs, rem = divide_multivariate(parse_poly("x"), [parse_poly("y")])
    assert qs[0].is_zero() and rem == parse_poly("x")


def test_divide_earliest_divisor_wins():
    qs, rem = divide_multivariate(parse_poly("x^2"), [parse_poly("x"), parse_poly("x^2")])
    assert qs[0] == parse_poly("x") and qs[1].is_zero() and rem.is_zero()


def test_divide_rejects_zero_divisor():
    with pytest.raises(ValueError):
        divide_multivariate(parse_poly("x"), [Poly.zero()])
    with pytest.raises(ValueError):
        divide_multivariate(parse_poly("x"), [])


@pytest.mark.parametrize("order", [LEX, GRLEX])
def test_divide_reconstruction_random(order, rand_poly):
    rng = random.Random(7003 if order is LEX else 7004)
    for _ in range(250):
        p = rand_poly(rng, variables=("x", "y", "z"), max_degree=4)
        divisors = [rand_poly(rng, variables=("x", "y", "z"), max_degree=3, nonzero=True)
                    for _ in range(rng.randint(1, 3))]
        qs, rem = divide_multivariate(p, divisors, order)
        recombined = rem
        for q, d in zip(qs, divisors):
            recombined = recombined + q * d
        assert recombined == p
        lms = [d.leading_monomial(order) for d in divisors]
        for mono, _ in rem.terms:
            assert not any(lm[0] <= mono[0] and lm[1] <= mono[1] and lm[2] <= mono[2]
                           for lm in lms)


def test_divide_budget():
    budget = StepBudget(3)
    with pytest.raises(StepBudgetExceeded):
        divide_multivariate(parse_poly("x^9 + x^8 + x^7 + x^6"),
                            [parse_poly("x")], LEX, budget)


# -- univariate gcd -----------------------------------------------------------

def test_gcd_univariate():
    g = gcd_univariate(parse_poly("x^2 - 1"), parse_poly("x - 1"))
    assert g == parse_poly("x - 1")
    assert gcd_univariate(parse_poly("3x^2"), Poly.zero()) == parse_poly("x^2")
    assert gcd_univariate(Poly.zero(), Poly.zero()).is_zero()
    assert gcd_univariate(parse_poly("x^3 + x"), parse_poly("3x^2 + 1")).is_constant()
    with pytest.raises(ValueError):
        gcd_univariate(parse_poly("x*y"), parse_poly("x"))
