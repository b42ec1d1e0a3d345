"""
Adjoint Action of One-Parameter Subgroups

This module handles the formal matrix X of the nilradical and the action of
the one-parameter subgroups g_{u,v}(t) = I + t E_{u,v} on it:

- the unitriangular group N: all (u, v) with u < v
- the unipotent radical U: (u, v) in M
- the Levi unipotent part U_L: (u, v) inside a diagonal block

Conjugation is computed entrywise as the literal product
(I + t E_{u,v}) X (I - t E_{u,v}). The action on polynomials substitutes each
x_{a,b} by the matching entry, so f goes to f(Ad_{g^{-1}} x) with the row and
column rules

    x_{a,b} -> x_{a,b} + t x_{v,b}   if a = u
    x_{a,b} -> x_{a,b} - t x_{a,u}   if b = v

reading x_{c,d} = 0 outside M.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from parinv.errors import BadMatrix, BadRoot, LeavesNilradical
from parinv.poly import Polynomial, PolynomialSpace, VariableId, VariableKind
from parinv.roots import Composition, Root, reductive_roots, roots_of_nilradical

logger = logging.getLogger(__name__)

Parameter = Union[VariableId, Fraction, int, Polynomial]
RationalMatrix = List[List[Fraction]]


class GroupTag(str, Enum):
    N = "N"
    U = "U"
    U_L = "U_L"


@dataclass(frozen=True)
class GroupGenerator:
    """The one-parameter element g_{u,v}(t) = I + t E_{u,v}."""

    u: int
    v: int
    parameter: Parameter = VariableId.parameter(1)

    def __post_init__(self):
        if self.u < 1 or self.v < 1 or self.u == self.v:
            raise BadRoot(f"g_{{{self.u},{self.v}}} needs two distinct positive indices")

    def with_parameter(self, parameter: Parameter) -> "GroupGenerator":
        return GroupGenerator(self.u, self.v, parameter)

    def parameter_in(self, space: PolynomialSpace) -> Polynomial:
        """The parameter as an element of the ring."""
        if isinstance(self.parameter, VariableId):
            if self.parameter.kind is not VariableKind.PARAMETER:
                raise BadRoot(f"{self.parameter.name} is not a parameter variable")
            return space.gen(self.parameter)
        if isinstance(self.parameter, (Fraction, int)):
            return space.constant(self.parameter)
        return self.parameter

    def rational_parameter(self) -> Fraction:
        if isinstance(self.parameter, (Fraction, int)):
            return Fraction(self.parameter)
        raise BadMatrix(f"g_{{{self.u},{self.v}}} needs a rational parameter to act on a point")

    def __str__(self) -> str:
        label = self.parameter.name if isinstance(self.parameter, VariableId) else str(self.parameter)
        return f"g_{{{self.u},{self.v}}}({label})"


def group_generators(
    comp: Composition,
    group: GroupTag,
    parameter: Parameter = VariableId.parameter(1),
) -> List[GroupGenerator]:
    """One-parameter generators of N, U or U_L, in lexicographic order of (u, v)."""
    if group is GroupTag.U:
        cells = sorted(roots_of_nilradical(comp))
    elif group is GroupTag.U_L:
        cells = sorted(reductive_roots(comp))
    else:
        cells = [Root(u, v) for u in range(1, comp.n + 1) for v in range(u + 1, comp.n + 1)]
    return [GroupGenerator(root.i, root.j, parameter) for root in cells]


# ----------------------------
# Formal matrix
# ----------------------------


@dataclass(frozen=True)
class FormalMatrix:
    """n x n grid of polynomials; indices are 1-based through entry()."""

    space: PolynomialSpace
    entries: Tuple[Tuple[Polynomial, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, a: int, b: int) -> Polynomial:
        return self.entries[a - 1][b - 1]

    def outside_support(self) -> List[Tuple[int, int]]:
        """Cells outside M holding a nonzero entry."""
        nilradical = self.space.nilradical
        return [
            (a, b)
            for a in range(1, self.n + 1)
            for b in range(1, self.n + 1)
            if self.entry(a, b) and not (a < b and Root(a, b) in nilradical)
        ]


def build_formal_matrix(space: PolynomialSpace) -> FormalMatrix:
    """X with x_{i,j} on the cells of M and zero elsewhere."""
    n = space.comp.n
    entries = tuple(
        tuple(space.entry(a, b) for b in range(1, n + 1))
        for a in range(1, n + 1)
    )
    return FormalMatrix(space, entries)


def _conjugated_entry(get, a: int, b: int, u: int, v: int, t):
    """Entry (a, b) of (I + tE_{u,v}) X (I - tE_{u,v}) for X given by get(a, b)."""
    value = get(a, b)
    if a == u:
        value = value + t * get(v, b)
    if b == v:
        value = value - t * get(a, u)
        if a == u:
            value = value - t * t * get(v, u)
    return value


def conjugate(X: FormalMatrix, g: GroupGenerator) -> FormalMatrix:
    """
    Conjugate the formal matrix by a one-parameter element.

    Args:
        X: Formal matrix of some composition
        g: Generator, its parameter a variable, rational or polynomial

    Returns:
        FormalMatrix: (I + tE_{u,v}) X (I - tE_{u,v})

    Raises:
        LeavesNilradical: If an entry outside M becomes nonzero
    """
    if g.u > X.n or g.v > X.n:
        raise BadRoot(f"{g} does not fit a {X.n} x {X.n} matrix")

    t = g.parameter_in(X.space)
    entries = tuple(
        tuple(_conjugated_entry(X.entry, a, b, g.u, g.v, t) for b in range(1, X.n + 1))
        for a in range(1, X.n + 1)
    )
    result = FormalMatrix(X.space, entries)

    escaped = result.outside_support()
    if escaped:
        raise LeavesNilradical(f"{g} moves entries outside M at cells {escaped}")
    return result


def notation_rule(space: PolynomialSpace, g: GroupGenerator, a: int, b: int) -> Polynomial:
    """The two-case row/column substitution for x_{a,b}, without the t^2 term."""
    t = g.parameter_in(space)
    value = space.entry(a, b)
    if a == g.u:
        value += t * space.entry(g.v, b)
    if b == g.v:
        value -= t * space.entry(a, g.u)
    return value


def _substitution(space: PolynomialSpace, g: GroupGenerator) -> Dict[VariableId, Polynomial]:
    """x-images for the cells g changes; cells in row u and column v."""
    n = space.comp.n
    if g.u > n or g.v > n:
        raise BadRoot(f"{g} does not fit composition {space.comp}")

    t = g.parameter_in(space)
    cells = {(g.u, b) for b in range(1, n + 1)} | {(a, g.v) for a in range(1, n + 1)}
    mapping: Dict[VariableId, Polynomial] = {}
    for a, b in sorted(cells):
        image = _conjugated_entry(space.entry, a, b, g.u, g.v, t)
        if a < b and Root(a, b) in space.nilradical:
            if image != space.entry(a, b):
                mapping[VariableId.matrix(Root(a, b))] = image
        elif image:
            raise LeavesNilradical(f"{g} moves entry ({a},{b}) outside M to {image}")
    return mapping


def act_on_polynomial(space: PolynomialSpace, f: Polynomial, g: GroupGenerator) -> Polynomial:
    """
    The polynomial x -> f(Ad_{g^{-1}} x).

    Only the entries g changes are substituted; when f has no variable in
    row u or column v it comes back unchanged.

    Raises:
        LeavesNilradical: If g does not preserve the nilradical
    """
    mapping = _substitution(space, g)
    used = set(space.variables_of(f))
    mapping = {var: image for var, image in mapping.items() if var in used}
    if not mapping:
        return f
    return space.substitute(f, mapping)


def act_on_point(comp: Composition, x: Sequence[Sequence[Fraction]], g: GroupGenerator) -> RationalMatrix:
    """
    Exact conjugation g x g^{-1} of a rational matrix supported on M.

    Raises:
        BadMatrix: If x has the wrong shape or support, or g has no rational parameter
        LeavesNilradical: If the result leaves M
    """
    check_support(comp, x)
    t = g.rational_parameter()
    n = comp.n

    def get(a: int, b: int) -> Fraction:
        return Fraction(x[a - 1][b - 1])

    result = [
        [_conjugated_entry(get, a, b, g.u, g.v, t) for b in range(1, n + 1)]
        for a in range(1, n + 1)
    ]
    nilradical = roots_of_nilradical(comp)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if result[a - 1][b - 1] and not (a < b and Root(a, b) in nilradical):
                raise LeavesNilradical(f"{g} moves entry ({a},{b}) outside M")
    return result


def check_support(comp: Composition, x: Sequence[Sequence[Fraction]]) -> None:
    """
    Validate an n x n rational matrix supported on M.

    Raises:
        BadMatrix: On a shape mismatch or a nonzero entry outside M
    """
    n = comp.n
    if len(x) != n or any(len(row) != n for row in x):
        raise BadMatrix(f"Expected a {n} x {n} matrix for composition {comp}")

    nilradical = roots_of_nilradical(comp)
    for a, row in enumerate(x, start=1):
        for b, value in enumerate(row, start=1):
            if value and not (a < b and Root(a, b) in nilradical):
                raise BadMatrix(f"Entry ({a},{b}) = {value} lies outside M for {comp}")
