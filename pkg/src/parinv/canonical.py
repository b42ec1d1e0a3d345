"""
Canonical Forms on the Slice Z

A generic point x of the nilradical has a unique point z in its U-orbit with
support in the broad base T. The values N_xi(x) determine z: restricted to Z,
each N_xi is A * c_xi + B with A and B depending only on coordinates of lower
remoteness, so the coordinates can be solved for one remoteness level at a
time.

Running the same triangular relations backwards expresses any U-invariant
polynomial f in the generators: substitute c_xi = (y_xi - B) / A into f on Z,
working in the field of rational functions in the symbols y_xi.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, FracField
from sympy.polys.orderings import grlex

from parinv.action import GroupTag, check_support
from parinv.errors import BadPolynomial, DegenerateOrbit, NonMonomialDenominator, NotInvariant
from parinv.generators import InvariantBuilder
from parinv.poly import Polynomial, VariableId, VariableKind
from parinv.roots import Root, prec_maximal_in_S

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class InvariantVector:
    """Exact values of N_xi for every xi in T."""

    values: Dict[Root, Fraction]

    def __getitem__(self, xi: Root) -> Fraction:
        return self.values[xi]


@dataclass(frozen=True)
class CanonicalPoint:
    """A point z = sum of c_xi E_xi of the slice Z."""

    coords: Dict[Root, Fraction]

    def to_matrix(self, n: int) -> List[List[Fraction]]:
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for root, value in self.coords.items():
            matrix[root.i - 1][root.j - 1] = value
        return matrix


@dataclass(frozen=True)
class Expression:
    """f = numerator(N) / denominator(N), both polynomials in the y symbols."""

    numerator: Polynomial
    denominator: Polynomial


def _point_of(builder: InvariantBuilder, x: Sequence[Sequence[Fraction]]) -> Dict[VariableId, Fraction]:
    check_support(builder.comp, x)
    return {
        VariableId.matrix(root): Fraction(x[root.i - 1][root.j - 1])
        for root in builder.gens.nilradical
    }


def invariant_values(builder: InvariantBuilder, x: Sequence[Sequence[Fraction]]) -> InvariantVector:
    """
    Evaluate every N_xi at a rational matrix.

    Raises:
        BadMatrix: If x is not an n x n matrix supported on M
    """
    point = _point_of(builder, x)
    return InvariantVector({
        xi: builder.space.evaluate(poly, point)
        for xi, poly in builder.broad_generators()
    })


def reconstruct_canonical(builder: InvariantBuilder, vector: InvariantVector) -> CanonicalPoint:
    """
    Solve N_xi(z) = v[xi] for the point z of Z, in increasing remoteness.

    Raises:
        DegenerateOrbit: If a leading coefficient vanishes along the solve
    """
    space = builder.space
    coords: Dict[Root, Fraction] = {}
    point: Dict[VariableId, Fraction] = {}

    for xi in builder.gens.ordered_broad():
        coefficient, rest = builder.leading_coefficient(xi)
        leading = space.evaluate(coefficient, point)
        if leading == 0:
            corner = ", ".join(f"N{phi}" for phi in sorted(prec_maximal_in_S(xi, builder.gens.base)))
            raise DegenerateOrbit(
                f"Leading coefficient of N{xi} vanishes (product of {corner or 'nothing'}); "
                f"the point is outside the generic set"
            )
        value = (vector[xi] - space.evaluate(rest, point)) / leading
        coords[xi] = value
        point[VariableId.slice(xi)] = value

    logger.debug(f"Reconstructed canonical point with {sum(1 for v in coords.values() if v)} nonzero coordinates")
    return CanonicalPoint(coords)


def canonical_form(builder: InvariantBuilder, x: Sequence[Sequence[Fraction]]) -> CanonicalPoint:
    """
    The unique point where the U-orbit of x meets Z.

    Raises:
        BadMatrix: If x is not supported on M
        DegenerateOrbit: If x is not generic
    """
    return reconstruct_canonical(builder, invariant_values(builder, x))


# ----------------------------
# Expression in generators
# ----------------------------


def _generator_field(builder: InvariantBuilder) -> Tuple[FracField, List[Root]]:
    """Rational functions in the symbols y_xi, xi in T, in remoteness order."""
    roots = builder.gens.ordered_broad()
    symbols = [Symbol(VariableId.generator(xi).name) for xi in roots]
    return FracField(symbols, QQ, grlex), roots


def _substitute_fraction(
    p: Polynomial,
    images: Mapping[int, FracElement],
    field: FracField,
) -> FracElement:
    """Evaluate p with ring variable k replaced by images[k]."""
    powers: Dict[Tuple[int, int], FracElement] = {}
    total = field.zero

    for monom, coeff in p.iterterms():
        term = field.ground_new(coeff)
        for k, exp in enumerate(monom):
            if not exp:
                continue
            if (k, exp) not in powers:
                powers[(k, exp)] = images[k] ** exp
            term = term * powers[(k, exp)]
        total = total + term
    return total


def _to_space(builder: InvariantBuilder, p: Polynomial, roots: Sequence[Root]) -> Polynomial:
    """Move a polynomial of the generator field's ring into the composition's ring."""
    space = builder.space
    slots = [space.index(VariableId.generator(xi)) for xi in roots]
    result: Dict[Monomial, object] = {}
    for monom, coeff in p.iterterms():
        full = [0] * len(space.variables)
        for slot, exp in zip(slots, monom):
            full[slot] = exp
        result[tuple(full)] = coeff
    return space.ring.from_dict(result)


def express_in_generators(builder: InvariantBuilder, f: Polynomial) -> Expression:
    """
    Write a U-invariant polynomial as P(N) / D(N) with D a monomial.

    Intermediate steps are rational functions in the y symbols, reduced by
    gcd. For f in the invariant algebra the denominator comes out as 1.

    Args:
        builder: Generator builder of the composition
        f: Polynomial in the matrix entries

    Returns:
        Expression: Reduced numerator and monic denominator in the y symbols

    Raises:
        BadPolynomial: If f uses variables other than matrix entries
        NotInvariant: If some generator of U moves f
        DegenerateOrbit: If a leading coefficient vanishes identically on Z
        NonMonomialDenominator: If the reduced denominator has more than one term
    """
    from parinv.verify import check_invariance

    space = builder.space
    foreign = [var.name for var in space.variables_of(f) if var.kind is not VariableKind.MATRIX]
    if foreign:
        raise BadPolynomial(f"Only matrix entries may appear, found {', '.join(foreign)}")

    report = check_invariance(f, GroupTag.U, builder.comp)
    if not report.ok:
        generator, residual = report.failures[0]
        raise NotInvariant(f"{generator} moves the polynomial; residual {residual}")

    if not builder.gens.broad:
        return Expression(numerator=f, denominator=space.one)

    field, roots = _generator_field(builder)
    images: Dict[int, FracElement] = {}

    # c_xi = (y_xi - B) / A with A and B already known in lower remoteness
    for y, xi in zip(field.gens, roots):
        coefficient, rest = builder.leading_coefficient(xi)
        a = _substitute_fraction(coefficient, images, field)
        if not a:
            raise DegenerateOrbit(f"Leading coefficient of N{xi} vanishes identically on Z")
        b = _substitute_fraction(rest, images, field)
        images[space.index(VariableId.slice(xi))] = (y - b) / a

    result = _substitute_fraction(builder.restrict_to_z(f), images, field)
    numer, denom = result.numer, result.denom
    lc = denom.LC
    numer, denom = numer.quo_ground(lc), denom.quo_ground(lc)
    if len(denom) != 1:
        raise NonMonomialDenominator(f"Reduced denominator {denom.as_expr()} is not a monomial in the generators")

    logger.debug(f"Expressed polynomial with {len(numer)} numerator terms")
    return Expression(numerator=_to_space(builder, numer, roots), denominator=_to_space(builder, denom, roots))
