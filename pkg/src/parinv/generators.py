"""
Invariant Generator Polynomials

Builds the polynomials attached to a composition:

- M_gamma: the minor of X with rows {a} + rows of S_gamma and columns
  cols of S_gamma + {b}, where gamma = (a, b) and S_gamma holds the base
  roots strictly inside the south-west corner of gamma
- L_phi: for an admissible pair xi = (i, j), xi' = (k, l), the sum
  over c = j..k of M_(i,c) * M_(c,l)
- N_xi for xi in T: x_xi on superdiagonal blocks, M_xi deeper up

plus the restrictions to the slices Y (support S + Phi) and Z (support T).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

from parinv.action import GroupGenerator, act_on_polynomial
from parinv.errors import BadRoot, RootNotInM, RootNotInT
from parinv.poly import Polynomial, PolynomialSpace, VariableId, determinant, polynomial_space
from parinv.roots import (
    AdmissiblePair,
    Composition,
    GeneratorSet,
    Root,
    build_generator_set,
    prec,
    prec_maximal_in_S,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinorSpec:
    """Rows and columns of the minor attached to a root."""

    gamma: Root
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.rows)


def minor_spec(gens: GeneratorSet, gamma: Root) -> MinorSpec:
    """
    Rows and columns of M_gamma.

    Raises:
        RootNotInM: If gamma is not a root of the nilradical
    """
    if gamma not in gens.nilradical:
        raise RootNotInM(f"{gamma} is not in M for {gens.composition}")
    inside = sorted(phi for phi in gens.S if prec(phi, gamma))
    rows = tuple(sorted([gamma.i] + [phi.i for phi in inside]))
    cols = tuple(sorted([phi.j for phi in inside] + [gamma.j]))
    return MinorSpec(gamma=gamma, rows=rows, cols=cols)


@dataclass(frozen=True)
class SliceY:
    """Coordinates c_xi for xi in S + Phi."""

    support: FrozenSet[Root]

    def is_generic(self, point: Dict[Root, object]) -> bool:
        """All slice coordinates nonzero."""
        return all(point.get(root) for root in self.support)


@dataclass(frozen=True)
class SliceZ:
    """Coordinates c_xi for xi in T."""

    support: FrozenSet[Root]


@dataclass
class InvariantBuilder:
    """Builds and caches generator polynomials for one composition."""

    gens: GeneratorSet
    space: PolynomialSpace
    _minors: Dict[Root, Polynomial] = field(default_factory=dict, repr=False)
    _restricted_z: Dict[Root, Polynomial] = field(default_factory=dict, repr=False)

    @property
    def comp(self) -> Composition:
        return self.gens.composition

    @property
    def slice_y(self) -> SliceY:
        return SliceY(self.gens.extended_base)

    @property
    def slice_z(self) -> SliceZ:
        return SliceZ(self.gens.broad)

    # Generators

    def minor_m(self, gamma: Root) -> Polynomial:
        """M_gamma; x_gamma when no base root lies inside the corner."""
        if gamma not in self._minors:
            spec = minor_spec(self.gens, gamma)
            matrix = [[self.space.entry(a, b) for b in spec.cols] for a in spec.rows]
            self._minors[gamma] = determinant(matrix)
            logger.debug(f"M{gamma} is a {spec.size} x {spec.size} minor with {len(self._minors[gamma])} terms")
        return self._minors[gamma]

    def l_poly(self, pair: AdmissiblePair) -> Polynomial:
        """L_phi: sum over the chain of M_(i,c) M_(c,l)."""
        i, l = pair.xi.i, pair.xi_prime.j
        total = self.space.zero
        for c in range(pair.xi.j, pair.xi_prime.i + 1):
            total += self.minor_m(Root(i, c)) * self.minor_m(Root(c, l))
        return total

    def n_poly(self, xi: Root) -> Polynomial:
        """
        N_xi for a root of the broad base.

        Raises:
            RootNotInT: If xi is not in T
        """
        if xi not in self.gens.broad:
            raise RootNotInT(f"{xi} is not in the broad base of {self.comp}")
        if xi in self.gens.m_prime:
            return self.minor_m(xi)
        return self.space.x(xi)

    def base_generators(self) -> List[Tuple[str, Polynomial]]:
        """(name, M_xi) for xi in S in base order, then (name, L_phi) per pair."""
        named = [(f"M{xi}", self.minor_m(xi)) for xi in self.gens.base.ordered()]
        named += [(f"L{pair.phi}", self.l_poly(pair)) for pair in self.gens.pairs]
        return named

    def broad_generators(self) -> List[Tuple[Root, Polynomial]]:
        """(xi, N_xi) by remoteness, then lexicographically."""
        return [(xi, self.n_poly(xi)) for xi in self.gens.ordered_broad()]

    # Restrictions

    def _restrict(self, f: Polynomial, support: FrozenSet[Root]) -> Polynomial:
        mapping: Dict[VariableId, Optional[VariableId]] = {
            VariableId.matrix(root): VariableId.slice(root) if root in support else None
            for root in self.gens.nilradical
        }
        return self.space.rename(f, mapping)

    def restrict_to_y(self, f: Polynomial) -> Polynomial:
        """x_gamma -> c_gamma on S + Phi, zero elsewhere."""
        return self._restrict(f, self.gens.extended_base)

    def restrict_to_z(self, f: Polynomial) -> Polynomial:
        """x_gamma -> c_gamma on T, zero elsewhere."""
        return self._restrict(f, self.gens.broad)

    def n_on_z(self, xi: Root) -> Polynomial:
        if xi not in self._restricted_z:
            self._restricted_z[xi] = self.restrict_to_z(self.n_poly(xi))
        return self._restricted_z[xi]

    # Leading coefficients

    def leading_coefficient(self, xi: Root) -> Tuple[Polynomial, Polynomial]:
        """
        Split N_xi restricted to Z as A * c_xi + B.

        A and B only involve slice coordinates of lower remoteness.

        Returns:
            Tuple[Polynomial, Polynomial]: (A, B)
        """
        restricted = self.n_on_z(xi)
        var = VariableId.slice(xi)
        coefficient = self.space.differentiate(restricted, var)
        rest = restricted - coefficient * self.space.gen(var)
        return coefficient, rest

    def expected_leading_product(self, xi: Root) -> Polynomial:
        """Product of N_phi on Z over the prec-maximal base roots inside the corner of xi."""
        product = self.space.one
        for phi in sorted(prec_maximal_in_S(xi, self.gens.base)):
            product *= self.n_on_z(phi)
        return product

    def minor_leading_product(self, xi: Root) -> Polynomial:
        """Product of the minors M_phi on Z over the same roots."""
        product = self.space.one
        for phi in sorted(prec_maximal_in_S(xi, self.gens.base)):
            product *= self.restrict_to_z(self.minor_m(phi))
        return product

    def leading_coefficient_violations(self) -> List[Root]:
        """
        Roots of T inside M' whose leading coefficient matches neither product.

        The coefficient is compared up to sign, the sign being fixed by the
        cofactor position of x_xi in its minor. It is accepted when it is the
        product of the N_phi or the product of the minors M_phi on Z.
        """
        violations = []
        for xi in self.gens.ordered_broad():
            if xi not in self.gens.m_prime:
                continue
            coefficient, _ = self.leading_coefficient(xi)
            candidates = (self.expected_leading_product(xi), self.minor_leading_product(xi))
            if not any(coefficient in (p, -p) for p in candidates):
                logger.warning(f"Leading coefficient of N{xi} on Z differs from the product over its corner")
                violations.append(xi)
        return violations

    def shift_identity_holds(self, pair: AdmissiblePair, i: int, j: int) -> bool:
        """
        Check how g_{i,j}(t) moves the two minors of L_phi that it touches.

        For xi = (a, b), xi' = (a', b') and b <= i < j <= a', the element
        g_{i,j}(t) taken as T_g = Ad_{g(-t)^{-1}} satisfies

            T_g M_(a,j) = M_(a,j) + t M_(a,i)
            T_g M_(i,b') = M_(i,b') - t M_(j,b')

        Raises:
            BadRoot: If (i, j) is not inside the connecting root of the pair
        """
        a, b = pair.xi.i, pair.xi.j
        a_prime, b_prime = pair.xi_prime.i, pair.xi_prime.j
        if not b <= i < j <= a_prime:
            raise BadRoot(f"({i},{j}) does not lie inside the connecting root {pair.alpha}")

        t = self.space.t(1)
        g = GroupGenerator(i, j, -t)

        left = act_on_polynomial(self.space, self.minor_m(Root(a, j)), g)
        right = act_on_polynomial(self.space, self.minor_m(Root(i, b_prime)), g)
        return (
            left == self.minor_m(Root(a, j)) + t * self.minor_m(Root(a, i))
            and right == self.minor_m(Root(i, b_prime)) - t * self.minor_m(Root(j, b_prime))
        )


@lru_cache(maxsize=None)
def invariant_builder(comp: Composition) -> InvariantBuilder:
    """Shared builder per composition."""
    return InvariantBuilder(build_generator_set(comp), polynomial_space(comp))
