"""
Exact Sparse Polynomials over the Rationals

This module provides the polynomial layer: one sympy sparse polynomial ring
over QQ per composition, with graded-lex order, whose generators are

- matrix entries x_{i,j} for (i,j) in M,
- one-parameter subgroup parameters t_1, t_2, t_3,
- slice coordinates c_{i,j},
- abstract generator symbols y_{i,j}.

Polynomials are sympy PolyElement values, so ring operations, equality and
printing come from sympy. On top of that the module adds substitution,
evaluation at rational points, renaming of variables (restrictions to
coordinate slices), JSON term lists and a memoized cofactor determinant.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from parinv.errors import BadPolynomial, MissingAssignment, RootNotInM
from parinv.roots import Composition, Root, roots_of_nilradical

logger = logging.getLogger(__name__)

Polynomial = PolyElement
Term = Tuple[List[Tuple[str, int]], str]

PARAMETER_COUNT = 3

_NAME_PATTERN = re.compile(r"^(?:([xcy])_\{(\d+),(\d+)\}|t_(\d+))$")


class VariableKind(str, Enum):
    MATRIX = "x"
    PARAMETER = "t"
    SLICE = "c"
    GENERATOR = "y"


@dataclass(frozen=True, order=True)
class VariableId:
    """A ring variable: a kind plus a root (i, j), or a parameter index in i."""

    kind: VariableKind
    i: int
    j: int = 0

    @classmethod
    def matrix(cls, root: Root) -> "VariableId":
        return cls(VariableKind.MATRIX, root.i, root.j)

    @classmethod
    def parameter(cls, index: int = 1) -> "VariableId":
        return cls(VariableKind.PARAMETER, index)

    @classmethod
    def slice(cls, root: Root) -> "VariableId":
        return cls(VariableKind.SLICE, root.i, root.j)

    @classmethod
    def generator(cls, root: Root) -> "VariableId":
        return cls(VariableKind.GENERATOR, root.i, root.j)

    @classmethod
    def parse(cls, name: str) -> "VariableId":
        """Parse a printed name such as 'x_{1,3}' or 't_1'."""
        match = _NAME_PATTERN.match(name.strip())
        if not match:
            raise BadPolynomial(f"Unknown variable name '{name}'")
        letter, i, j, index = match.groups()
        if index is not None:
            return cls.parameter(int(index))
        return cls(VariableKind(letter), int(i), int(j))

    @property
    def root(self) -> Root:
        if self.kind is VariableKind.PARAMETER:
            raise ValueError(f"Parameter {self.name} has no root")
        return Root(self.i, self.j)

    @property
    def name(self) -> str:
        if self.kind is VariableKind.PARAMETER:
            return f"t_{self.i}"
        return f"{self.kind.value}_{{{self.i},{self.j}}}"


def to_fraction(value) -> Fraction:
    """Convert a QQ element (python or gmpy flavour) to a Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


def format_rational(value: Union[Fraction, int]) -> str:
    """'p/q', or 'p' for integers."""
    return str(Fraction(value))


def to_qq(value: Union[Fraction, int]):
    """Fraction or int to a QQ element."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


class PolynomialSpace:
    """
    The polynomial ring attached to one composition.

    Variables are ordered x (by root), t, c (by root), y (by root); the ring
    uses graded-lex order on that ordering, so structural equality of
    PolyElement values is equality of polynomials.
    """

    def __init__(self, comp: Composition):
        self.comp = comp
        self.nilradical = roots_of_nilradical(comp)
        roots = sorted(self.nilradical)

        variables: List[VariableId] = [VariableId.matrix(root) for root in roots]
        variables += [VariableId.parameter(k) for k in range(1, PARAMETER_COUNT + 1)]
        variables += [VariableId.slice(root) for root in roots]
        variables += [VariableId.generator(root) for root in roots]

        self.variables: Tuple[VariableId, ...] = tuple(variables)
        self.ring = PolyRing([Symbol(var.name) for var in self.variables], QQ, grlex)
        self._index: Dict[VariableId, int] = {var: k for k, var in enumerate(self.variables)}
        logger.debug(f"Polynomial ring for {comp} with {len(self.variables)} variables")

    # Elements

    @property
    def zero(self) -> Polynomial:
        return self.ring.zero

    @property
    def one(self) -> Polynomial:
        return self.ring.one

    def index(self, var: VariableId) -> int:
        if var not in self._index:
            if var.kind is VariableKind.PARAMETER:
                raise BadPolynomial(f"Only parameters t_1..t_{PARAMETER_COUNT} exist")
            raise RootNotInM(f"{var.name} refers to a root outside M for {self.comp}")
        return self._index[var]

    def gen(self, var: VariableId) -> Polynomial:
        return self.ring.gens[self.index(var)]

    def x(self, root: Root) -> Polynomial:
        return self.gen(VariableId.matrix(root))

    def t(self, index: int = 1) -> Polynomial:
        return self.gen(VariableId.parameter(index))

    def c(self, root: Root) -> Polynomial:
        return self.gen(VariableId.slice(root))

    def y(self, root: Root) -> Polynomial:
        return self.gen(VariableId.generator(root))

    def entry(self, a: int, b: int) -> Polynomial:
        """Entry (a, b) of the formal matrix: x_{a,b} on M, zero elsewhere."""
        if a < b and Root(a, b) in self.nilradical:
            return self.x(Root(a, b))
        return self.ring.zero

    def constant(self, value: Union[Fraction, int]) -> Polynomial:
        return self.ring.ground_new(to_qq(value))

    def monomial(self, exponents: Mapping[VariableId, int]) -> Polynomial:
        """The monomial with the given exponents and coefficient 1."""
        monom = [0] * len(self.variables)
        for var, exp in exponents.items():
            monom[self.index(var)] = exp
        return self.ring.from_dict({tuple(monom): QQ.one})

    def variables_of(self, p: Polynomial) -> List[VariableId]:
        """Variables occurring in p, in ring order."""
        used = set()
        for monom in p.itermonoms():
            used.update(k for k, exp in enumerate(monom) if exp)
        return [self.variables[k] for k in sorted(used)]

    # Operations

    def substitute(self, p: Polynomial, mapping: Mapping[VariableId, Polynomial]) -> Polynomial:
        """
        Apply the ring homomorphism sending each mapped variable to its image.

        Unmapped variables are left alone; all replacements happen simultaneously.
        """
        if not mapping:
            return p
        replacements = [(self.gen(var), image) for var, image in mapping.items()]
        return p.compose(replacements)

    def differentiate(self, p: Polynomial, var: VariableId) -> Polynomial:
        return p.diff(self.gen(var))

    def evaluate(self, p: Polynomial, point: Mapping[VariableId, Union[Fraction, int]]) -> Fraction:
        """
        Exact value of p at a rational point.

        Raises:
            MissingAssignment: If p uses a variable the point does not assign
        """
        missing = [var.name for var in self.variables_of(p) if var not in point]
        if missing:
            raise MissingAssignment(f"No value given for {', '.join(missing)}")

        values = {self.index(var): to_qq(value) for var, value in point.items() if var in self._index}
        total = QQ.zero
        for monom, coeff in p.iterterms():
            term = coeff
            for k, exp in enumerate(monom):
                if exp:
                    term *= values[k] ** exp
            total += term
        return to_fraction(total)

    def rename(self, p: Polynomial, mapping: Mapping[VariableId, Optional[VariableId]]) -> Polynomial:
        """
        Rename variables, sending those mapped to None to zero.

        Sources and targets must be disjoint. This is a substitution by
        variables or zero, done on exponent vectors directly.
        """
        moves = [
            (self.index(src), None if dst is None else self.index(dst))
            for src, dst in mapping.items()
        ]
        result: Dict[Tuple[int, ...], object] = {}
        for monom, coeff in p.iterterms():
            new = list(monom)
            for src, dst in moves:
                exp = monom[src]
                if not exp:
                    continue
                if dst is None:
                    break
                new[src] = 0
                new[dst] += exp
            else:
                key = tuple(new)
                result[key] = result.get(key, QQ.zero) + coeff
        return self.ring.from_dict(result)

    # Serialization

    def to_terms(self, p: Polynomial) -> List[Term]:
        """JSON term list: [[[name, exponent], ...], 'p/q'] per term, in ring order."""
        terms: List[Term] = []
        for monom, coeff in p.terms():
            factors = [(self.variables[k].name, exp) for k, exp in enumerate(monom) if exp]
            terms.append((factors, format_rational(to_fraction(coeff))))
        return terms

    def from_terms(self, terms: Sequence[Tuple[Sequence[Tuple[str, int]], str]]) -> Polynomial:
        """Inverse of to_terms; repeated monomials are added up."""
        result = self.ring.zero
        for factors, coefficient in terms:
            try:
                value = Fraction(coefficient)
            except (ValueError, ZeroDivisionError):
                raise BadPolynomial(f"Bad coefficient '{coefficient}'")
            exponents: Dict[VariableId, int] = {}
            for name, exp in factors:
                if exp < 0:
                    raise BadPolynomial(f"Negative exponent for {name}")
                var = VariableId.parse(name)
                exponents[var] = exponents.get(var, 0) + exp
            result += self.monomial(exponents) * self.constant(value)
        return result

    def render(self, p: Polynomial) -> str:
        return str(p)


@lru_cache(maxsize=None)
def polynomial_space(comp: Composition) -> PolynomialSpace:
    """Shared ring per composition."""
    return PolynomialSpace(comp)


def determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """
    Exact determinant by cofactor expansion along rows.

    Sub-determinants are memoized on the tuple of remaining columns, which
    also fixes the row being expanded. Zero entries are skipped.

    Args:
        matrix: Square matrix of polynomials from one ring, size >= 1

    Returns:
        Polynomial: The determinant
    """
    size = len(matrix)
    if size == 0 or any(len(row) != size for row in matrix):
        raise ValueError("determinant needs a non-empty square matrix")
    ring = matrix[0][0].ring

    @lru_cache(maxsize=None)
    def expand(columns: Tuple[int, ...]) -> Polynomial:
        row = size - len(columns)
        if len(columns) == 1:
            return matrix[row][columns[0]]

        total = ring.zero
        for position, column in enumerate(columns):
            entry = matrix[row][column]
            if not entry:
                continue
            minor = expand(columns[:position] + columns[position + 1:])
            if not minor:
                continue
            if position % 2:
                total -= entry * minor
            else:
                total += entry * minor
        return total

    return expand(tuple(range(size)))
