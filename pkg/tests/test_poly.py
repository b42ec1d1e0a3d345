"""Tests for the polynomial layer: ring operations, substitution, evaluation, terms and determinants."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import R
from parinv.errors import BadPolynomial, MissingAssignment, RootNotInM
from parinv.poly import (
    VariableId,
    VariableKind,
    determinant,
    format_rational,
    polynomial_space,
)
from parinv.roots import Composition

SPACE = polynomial_space(Composition((1, 1, 1)))
X12, X13, X23 = (VariableId.matrix(R(*cell)) for cell in ((1, 2), (1, 3), (2, 3)))
T1 = VariableId.parameter(1)
VARS = [X12, X13, X23, T1]


@st.composite
def polynomials(draw):
    terms = draw(st.lists(
        st.tuples(st.lists(st.integers(0, 2), min_size=len(VARS), max_size=len(VARS)), st.integers(-3, 3)),
        max_size=4,
    ))
    p = SPACE.zero
    for exponents, coefficient in terms:
        p += SPACE.constant(coefficient) * SPACE.monomial(dict(zip(VARS, exponents)))
    return p


points = st.fixed_dictionaries({var: st.fractions(min_value=-5, max_value=5, max_denominator=4) for var in VARS})

SETTINGS = settings(max_examples=25, deadline=None)


def permutation_determinant(matrix):
    size = len(matrix)
    total = SPACE.zero
    for perm in itertools.permutations(range(size)):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = SPACE.constant(-1 if inversions % 2 else 1)
        for row, col in enumerate(perm):
            term *= matrix[row][col]
        total += term
    return total


# ----------------------------
# Variables
# ----------------------------


def test_variable_names_round_trip():
    for var in (X13, T1, VariableId.slice(R(2, 5)), VariableId.generator(R(1, 4))):
        assert VariableId.parse(var.name) == var
    assert X13.name == "x_{1,3}"
    assert T1.name == "t_1"


@pytest.mark.parametrize("name", ["z_{1,2}", "x_1,2", "t", "x_{1,}"])
def test_unknown_variable_names(name):
    with pytest.raises(BadPolynomial):
        VariableId.parse(name)


def test_parameter_has_no_root():
    with pytest.raises(ValueError):
        T1.root


def test_ring_variable_order(comp_121):
    space = polynomial_space(comp_121)
    kinds = [var.kind for var in space.variables]
    assert kinds == (
        [VariableKind.MATRIX] * 5 + [VariableKind.PARAMETER] * 3
        + [VariableKind.SLICE] * 5 + [VariableKind.GENERATOR] * 5
    )
    assert space.variables[0] == VariableId.matrix(R(1, 2))


def test_index_errors():
    with pytest.raises(RootNotInM):
        SPACE.x(R(1, 4))
    with pytest.raises(BadPolynomial):
        SPACE.t(4)


def test_entry_is_zero_outside_nilradical(comp_121):
    space = polynomial_space(comp_121)
    assert space.entry(2, 3) == space.zero
    assert space.entry(3, 1) == space.zero
    assert space.entry(1, 3) == space.x(R(1, 3))


# ----------------------------
# Ring laws and homomorphisms
# ----------------------------


@SETTINGS
@given(polynomials(), polynomials(), polynomials())
def test_ring_laws(p, q, r):
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert p - p == SPACE.zero


@SETTINGS
@given(polynomials(), polynomials(), points)
def test_evaluation_is_a_homomorphism(p, q, point):
    assert SPACE.evaluate(p * q, point) == SPACE.evaluate(p, point) * SPACE.evaluate(q, point)
    assert SPACE.evaluate(p + q, point) == SPACE.evaluate(p, point) + SPACE.evaluate(q, point)


@SETTINGS
@given(polynomials(), polynomials())
def test_substitution_is_a_homomorphism(p, q):
    mapping = {X12: SPACE.gen(X12) + SPACE.t(1) * SPACE.gen(X13), X23: SPACE.gen(X12) * SPACE.gen(X13)}
    assert SPACE.substitute(p * q, mapping) == SPACE.substitute(p, mapping) * SPACE.substitute(q, mapping)
    assert SPACE.substitute(p + q, mapping) == SPACE.substitute(p, mapping) + SPACE.substitute(q, mapping)


def test_substitution_is_simultaneous():
    x12, x13 = SPACE.gen(X12), SPACE.gen(X13)
    swapped = SPACE.substitute(x12 * x12 * x13, {X12: x13, X13: x12})
    assert swapped == x13 * x13 * x12


@SETTINGS
@given(polynomials(), polynomials())
def test_product_rule(p, q):
    for var in VARS:
        assert SPACE.differentiate(p * q, var) == (
            SPACE.differentiate(p, var) * q + p * SPACE.differentiate(q, var)
        )


# ----------------------------
# Evaluation, renaming and terms
# ----------------------------


def test_evaluate_exact():
    p = SPACE.gen(X12) * SPACE.gen(X23) - SPACE.constant(Fraction(1, 3)) * SPACE.gen(X13)
    value = SPACE.evaluate(p, {X12: Fraction(1, 2), X23: 4, X13: Fraction(3, 5)})
    assert value == Fraction(9, 5)
    assert isinstance(value, Fraction)


def test_evaluate_needs_every_variable():
    with pytest.raises(MissingAssignment):
        SPACE.evaluate(SPACE.gen(X12) * SPACE.gen(X13), {X12: 1})


def test_rename_to_slice_and_zero():
    p = SPACE.gen(X12) * SPACE.gen(X23) + SPACE.gen(X13)
    renamed = SPACE.rename(p, {X12: VariableId.slice(R(1, 2)), X23: VariableId.slice(R(2, 3)), X13: None})
    assert renamed == SPACE.c(R(1, 2)) * SPACE.c(R(2, 3))


def test_terms_round_trip():
    p = SPACE.constant(Fraction(-2, 3)) * SPACE.gen(X12) ** 2 * SPACE.t(1) + SPACE.gen(X23) + SPACE.constant(5)
    terms = SPACE.to_terms(p)
    assert ([("x_{2,3}", 1)], "1") in terms
    assert ([], "5") in terms
    assert SPACE.from_terms(terms) == p


def test_from_terms_adds_repeated_monomials():
    terms = [([("x_{1,2}", 1)], "1/2"), ([("x_{1,2}", 1)], "1/2"), ([("x_{1,3}", 1), ("x_{1,3}", 1)], "1")]
    assert SPACE.from_terms(terms) == SPACE.gen(X12) + SPACE.gen(X13) ** 2


@pytest.mark.parametrize("terms", [
    [([("x_{1,2}", 1)], "one")],
    [([("x_{1,2}", 1)], "1/0")],
    [([("x_{1,2}", -1)], "1")],
    [([("w", 1)], "1")],
])
def test_from_terms_rejects_malformed_terms(terms):
    with pytest.raises(BadPolynomial):
        SPACE.from_terms(terms)


def test_format_rational():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-1, 4)) == "-1/4"


# ----------------------------
# Determinant
# ----------------------------


@SETTINGS
@given(st.integers(1, 4).flatmap(lambda size: st.lists(
    st.lists(polynomials(), min_size=size, max_size=size), min_size=size, max_size=size,
)))
def test_determinant_matches_permutation_expansion(matrix):
    assert determinant(matrix) == permutation_determinant(matrix)


def test_determinant_with_zero_corner(space_2132):
    x = lambda i, j: space_2132.x(R(i, j))
    matrix = [[space_2132.entry(a, b) for b in (3, 4, 6)] for a in (1, 2, 3)]
    expected = (
        x(1, 3) * x(2, 4) * x(3, 6) - x(1, 3) * x(2, 6) * x(3, 4)
        - x(1, 4) * x(2, 3) * x(3, 6) + x(1, 6) * x(2, 3) * x(3, 4)
    )
    assert determinant(matrix) == expected
    assert len(determinant(matrix)) == 4


def test_determinant_rejects_non_square():
    with pytest.raises(ValueError):
        determinant([])
    with pytest.raises(ValueError):
        determinant([[SPACE.one, SPACE.zero]])
