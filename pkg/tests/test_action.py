"""Tests for the one-parameter subgroup action on the formal matrix, polynomials and points."""

from fractions import Fraction

import pytest

from conftest import R
from parinv.action import (
    GroupGenerator,
    GroupTag,
    act_on_point,
    act_on_polynomial,
    build_formal_matrix,
    check_support,
    conjugate,
    group_generators,
    notation_rule,
)
from parinv.errors import BadMatrix, BadRoot, LeavesNilradical
from parinv.poly import VariableId, polynomial_space
from parinv.roots import Composition, roots_of_nilradical


def unit(n, *cells):
    x = [[Fraction(0)] * n for _ in range(n)]
    for i, j in cells:
        x[i - 1][j - 1] = Fraction(1)
    return x


def test_generator_counts(comp_2132):
    assert len(group_generators(comp_2132, GroupTag.N)) == 28
    assert len(group_generators(comp_2132, GroupTag.U)) == 23
    assert len(group_generators(comp_2132, GroupTag.U_L)) == 5
    assert [(g.u, g.v) for g in group_generators(comp_2132, GroupTag.U_L)] == [
        (1, 2), (4, 5), (4, 6), (5, 6), (7, 8),
    ]


def test_generator_validation_and_label():
    with pytest.raises(BadRoot):
        GroupGenerator(2, 2)
    with pytest.raises(BadRoot):
        GroupGenerator(0, 2)
    assert str(GroupGenerator(1, 2)) == "g_{1,2}(t_1)"
    assert str(GroupGenerator(1, 2, VariableId.parameter(2))) == "g_{1,2}(t_2)"


def test_row_rule(space_2132):
    g = GroupGenerator(2, 3)
    t = space_2132.t(1)
    for b in range(4, 9):
        image = act_on_polynomial(space_2132, space_2132.x(R(2, b)), g)
        assert image == space_2132.x(R(2, b)) + t * space_2132.x(R(3, b))
    # column 3 only picks up x_{a,2}, which is zero throughout
    assert act_on_polynomial(space_2132, space_2132.x(R(1, 3)), g) == space_2132.x(R(1, 3))


def test_column_rule(space_2132):
    g = GroupGenerator(4, 7)
    t = space_2132.t(1)
    image = act_on_polynomial(space_2132, space_2132.x(R(1, 7)), g)
    assert image == space_2132.x(R(1, 7)) - t * space_2132.x(R(1, 4))


def test_untouched_polynomial_comes_back_unchanged(space_2132):
    f = space_2132.x(R(1, 3)) * space_2132.x(R(6, 8))
    assert act_on_polynomial(space_2132, f, GroupGenerator(4, 5)) is f


def test_literal_conjugation_matches_polynomial_action(comp_121):
    space = polynomial_space(comp_121)
    X = build_formal_matrix(space)
    for g in group_generators(comp_121, GroupTag.N):
        conjugated = conjugate(X, g)
        for root in space.nilradical:
            assert act_on_polynomial(space, space.x(root), g) == conjugated.entry(root.i, root.j)
            assert notation_rule(space, g, root.i, root.j) == conjugated.entry(root.i, root.j)


def test_parabolic_generators_preserve_nilradical(comp_2132, space_2132):
    X = build_formal_matrix(space_2132)
    for group in (GroupTag.N, GroupTag.U_L):
        for g in group_generators(comp_2132, group):
            assert conjugate(X, g).outside_support() == []


def test_lower_triangular_element_leaves_nilradical():
    space = polynomial_space(Composition((1, 1)))
    with pytest.raises(LeavesNilradical):
        conjugate(build_formal_matrix(space), GroupGenerator(2, 1))
    with pytest.raises(LeavesNilradical):
        act_on_polynomial(space, space.x(R(1, 2)), GroupGenerator(2, 1))


def test_generator_must_fit_matrix(space_2132):
    with pytest.raises(BadRoot):
        conjugate(build_formal_matrix(space_2132), GroupGenerator(1, 9))


def test_one_parameter_group_law(space_2132):
    x = lambda i, j: space_2132.x(R(i, j))
    f = x(1, 5) * x(3, 6) - x(1, 6) * x(3, 5) + x(2, 4)
    t1, t2 = space_2132.t(1), space_2132.t(2)
    g = GroupGenerator(4, 5)
    twice = act_on_polynomial(space_2132, act_on_polynomial(space_2132, f, g), g.with_parameter(VariableId.parameter(2)))
    assert twice == act_on_polynomial(space_2132, f, g.with_parameter(t1 + t2))


def test_x13_is_moved_by_the_levi_part(space_2132):
    image = act_on_polynomial(space_2132, space_2132.x(R(1, 3)), GroupGenerator(1, 2))
    assert image - space_2132.x(R(1, 3)) == space_2132.t(1) * space_2132.x(R(2, 3))


# ----------------------------
# Points
# ----------------------------


def test_act_on_point(comp_2132):
    moved = act_on_point(comp_2132, unit(8, (2, 3)), GroupGenerator(3, 4, 1))
    assert moved[1][2] == 1
    assert moved[1][3] == -1
    assert sum(1 for row in moved for value in row if value) == 2


def test_act_on_point_inverse(comp_2132):
    x = unit(8, (1, 3), (2, 4), (3, 7), (4, 8), (5, 7))
    g = GroupGenerator(3, 5, Fraction(2, 3))
    back = act_on_point(comp_2132, act_on_point(comp_2132, x, g), g.with_parameter(Fraction(-2, 3)))
    assert back == x


def test_act_on_point_needs_rational_parameter(comp_2132):
    with pytest.raises(BadMatrix):
        act_on_point(comp_2132, unit(8), GroupGenerator(1, 3))


def test_check_support(comp_121):
    check_support(comp_121, unit(4, (1, 2), (1, 4)))
    with pytest.raises(BadMatrix):
        check_support(comp_121, unit(4, (2, 3)))
    with pytest.raises(BadMatrix):
        check_support(comp_121, unit(3))
    with pytest.raises(BadMatrix):
        check_support(comp_121, [[Fraction(0)] * 3 for _ in range(4)])


def test_nilradical_cells_of_unit_matrices(comp_121):
    for root in roots_of_nilradical(comp_121):
        check_support(comp_121, unit(4, (root.i, root.j)))
