from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import POOL, monomials, polynomials
from oracles import degrevlex_greater, dense, evaluate, lex_greater
from jetmult.polycore import (
    DEGREVLEX,
    LEX,
    Cmp,
    JetVar,
    Monomial,
    ParseError,
    Polynomial,
    compare_monomials,
    parse_polynomial,
    serialize,
    var,
)

x10, x11, x20, x21 = var(1, 0), var(1, 1), var(2, 0), var(2, 1)


def test_jetvar_validation_and_order():
    with pytest.raises(ValueError):
        JetVar(0, 1)
    with pytest.raises(ValueError):
        JetVar(1, -1)
    assert sorted([JetVar(2, 0), JetVar(1, 3), JetVar(1, 0)]) == [JetVar(1, 0), JetVar(1, 3), JetVar(2, 0)]
    assert str(JetVar(3, 2)) == "x3_2"


def test_monomial_weights():
    mo = Monomial({JetVar(1, 2): 3, JetVar(2, 0): 1, JetVar(3, 1): 0})
    assert mo.total_degree == 4
    assert mo.jet_weight == 6
    assert JetVar(3, 1) not in mo.exponents
    assert Monomial().is_one()


def test_add_examples():
    assert (x10 + (-x10)).is_zero()
    p = x10 * x21 + x11 * x20
    assert len(p) == 2
    assert Polynomial.var(JetVar(1, 0), Fraction(1, 2)) + Polynomial.var(JetVar(1, 0), Fraction(1, 3)) == \
        Polynomial.var(JetVar(1, 0), Fraction(5, 6))


def test_mul_examples():
    assert (x10 + x20) * (x10 - x20) == x10**2 - x20**2
    assert (x10 * x20 * 7) * Polynomial() == Polynomial()
    assert (x10 * x10).as_dict() == {Monomial({JetVar(1, 0): 2}): 1}


def test_substitute_examples():
    assert (x10 * x20).substitute({JetVar(1, 0): 0}).is_zero()
    assert (x10 + x20).substitute({JetVar(1, 0): x11}) == x11 + x20
    p = x10 * x21 + x11 * x20
    got = p.substitute({JetVar(1, 1): 3, JetVar(2, 1): 5})
    assert got == 5 * x10 + 3 * x20
    # independent check: evaluate both sides at a point
    point = {JetVar(1, 0): Fraction(2, 7), JetVar(2, 0): Fraction(-3, 4), JetVar(1, 1): 3, JetVar(2, 1): 5}
    assert evaluate(got, point) == evaluate(p, point)


def test_substitute_is_simultaneous():
    swap = {JetVar(1, 0): x20, JetVar(2, 0): x10}
    assert (x10 - 2 * x20).substitute(swap) == x20 - 2 * x10


def test_compare_examples():
    one = Monomial()
    a = Monomial({JetVar(1, 0): 2})
    b = Monomial.of(JetVar(1, 0), JetVar(2, 0))
    assert compare_monomials(DEGREVLEX, one, Monomial.of(JetVar(1, 0))) is Cmp.LT
    assert compare_monomials(DEGREVLEX, a, b) is Cmp.GT
    assert compare_monomials(LEX, a, a) is Cmp.EQ
    variables = [JetVar(1, 0), JetVar(2, 0)]
    assert degrevlex_greater(dense(a, variables), dense(b, variables))


@given(monomials(), monomials())
def test_compare_matches_brute_force(u, v):
    variables = sorted(set(POOL))
    du, dv = dense(u, variables), dense(v, variables)
    for ordering, greater in ((DEGREVLEX, degrevlex_greater), (LEX, lex_greater)):
        expected = Cmp.GT if greater(du, dv) else Cmp.LT if greater(dv, du) else Cmp.EQ
        assert compare_monomials(ordering, u, v) is expected


@settings(max_examples=300)
@given(monomials(), monomials(), monomials(), st.sampled_from([DEGREVLEX, LEX]))
def test_ordering_total_and_multiplicative(u, v, w, ordering):
    c = ordering.compare(u, v)
    assert ordering.compare(v, u) == -c
    assert ordering.compare(u * w, v * w) == c
    assert ordering.compare(Monomial(), u) <= 0


@settings(max_examples=200, deadline=None)
@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + 0 == p and p * 1 == p


@given(polynomials())
def test_serialize_round_trip(p):
    s = serialize(p)
    assert parse_polynomial(s) == p
    assert serialize(parse_polynomial(s)) == s


@settings(max_examples=150, deadline=None)
@given(polynomials(max_degree=3), polynomials(max_degree=3),
       st.dictionaries(st.sampled_from(POOL), polynomials(max_degree=2, max_terms=3), max_size=3))
def test_substitute_homomorphism(p, q, assignment):
    assert (p * q).substitute(assignment) == p.substitute(assignment) * q.substitute(assignment)
    assert (p + q).substitute(assignment) == p.substitute(assignment) + q.substitute(assignment)


def test_serialize_format():
    assert serialize(Polynomial()) == "0"
    assert serialize(x10 * x21 + x11 * x20) == "x1_1*x2_0 + x1_0*x2_1"
    p = parse_polynomial("1/2*x1_0^2 - x2_3")
    assert p.coeff(Monomial({JetVar(1, 0): 2})) == Fraction(1, 2)
    assert serialize(p) == "1/2*x1_0^2 - x2_3"
    assert serialize(-3 * x10 + 1) == "-3*x1_0 + 1"


def test_parse_examples():
    assert parse_polynomial("x1_0*x2_0") == x10 * x20
    assert parse_polynomial("x1_0*x2_1 + x1_1*x2_0") == x10 * x21 + x11 * x20
    assert parse_polynomial("  x1_0 *\n x1_0 ") == x10**2


@pytest.mark.parametrize(
    "src, line, column",
    [
        ("x1_0 + ", 1, 8),
        ("x1_0*\n y", 2, 2),
        ("3/0*x1_0", 1, 3),
        ("x1_0^0", 1, 6),
        ("x0_1", 1, 1),
        ("x1_0 x2_0", 1, 6),
    ],
)
def test_parse_errors_carry_position(src, line, column):
    with pytest.raises(ParseError) as err:
        parse_polynomial(src)
    assert (err.value.line, err.value.column) == (line, column)


def test_parse_rejects_empty():
    with pytest.raises(ParseError):
        parse_polynomial("   ")
