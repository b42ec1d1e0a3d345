"""
Root Combinatorics for Parabolic Nilradicals

This module provides the poset side of the toolkit: positive roots of type A
identified with matrix cells (i, j), the block composition of a parabolic
subalgebra of gl(n), and every set derived from it: the nilradical roots M,
the reductive roots, the layered base S, admissible pairs and the roots Phi,
the broad base T, the roots M' lying at block distance two or more, and
remoteness.

Indices are 1-based throughout to match the usual matrix pictures.
All values are immutable and every function is pure, so results are cached
per composition.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

from parinv.errors import (
    BadComposition,
    BadRoot,
    BaseInvariantViolation,
    DuplicatePhi,
    RootNotInM,
)

logger = logging.getLogger(__name__)


# ----------------------------
# Roots and compositions
# ----------------------------


@dataclass(frozen=True, order=True)
class Root:
    """A positive root e_i - e_j, stored as the matrix cell (i, j) with i < j."""

    i: int
    j: int

    def __post_init__(self):
        if not (isinstance(self.i, int) and isinstance(self.j, int) and 1 <= self.i < self.j):
            raise BadRoot(f"({self.i},{self.j}) is not a positive root: need 1 <= i < j")

    def __add__(self, other: "Root") -> "Root":
        """Compose a chain (a,b) + (b,c) = (a,c)."""
        if self.j != other.i:
            raise BadRoot(f"{self} + {other} is not a root: the pair is not a chain")
        return Root(self.i, other.j)

    def as_list(self) -> List[int]:
        return [self.i, self.j]

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


@dataclass(frozen=True)
class Composition:
    """Block sizes (r_1, ..., r_s) of the diagonal blocks of a parabolic subalgebra."""

    sizes: Tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(self.sizes)
        if not sizes:
            raise BadComposition("A composition needs at least one block")
        for size in sizes:
            if isinstance(size, bool) or not isinstance(size, int) or size < 1:
                raise BadComposition(f"Block sizes must be positive integers, got {list(sizes)}")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse comma-separated block sizes such as '2,1,3,2'."""
        parts = [part.strip() for part in text.strip().strip("()").split(",")]
        if not all(parts):
            raise BadComposition(f"Empty block size in '{text}'")
        try:
            sizes = tuple(int(part) for part in parts)
        except ValueError:
            raise BadComposition(f"Cannot parse block sizes from '{text}'")
        return cls(sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def s(self) -> int:
        return len(self.sizes)

    @cached_property
    def partial_sums(self) -> Tuple[int, ...]:
        """R_0 = 0, R_k = r_1 + ... + r_k."""
        return (0,) + tuple(itertools.accumulate(self.sizes))

    @cached_property
    def _blocks(self) -> Tuple[int, ...]:
        blocks = [0]
        for k, size in enumerate(self.sizes, start=1):
            blocks.extend([k] * size)
        return tuple(blocks)

    def block_of(self, i: int) -> int:
        """The unique k with R_{k-1} < i <= R_k."""
        if not 1 <= i <= self.n:
            raise BadRoot(f"Index {i} is outside 1..{self.n}")
        return self._blocks[i]

    def cell_block(self, root: Root) -> Tuple[int, int]:
        """The block X_{k,l} containing the cell of a root."""
        return self.block_of(root.i), self.block_of(root.j)

    def __str__(self) -> str:
        return "(" + ",".join(str(size) for size in self.sizes) + ")"


def enumerate_compositions(n: int) -> Iterator[Composition]:
    """All compositions of n, in a fixed order (cuts read as binary words)."""
    if n < 1:
        return
    for cuts in itertools.product((0, 1), repeat=n - 1):
        sizes = []
        current = 1
        for cut in cuts:
            if cut:
                sizes.append(current)
                current = 1
            else:
                current += 1
        sizes.append(current)
        yield Composition(tuple(sizes))


# ----------------------------
# Root sets
# ----------------------------


@lru_cache(maxsize=None)
def roots_of_nilradical(comp: Composition) -> FrozenSet[Root]:
    """M: cells strictly above the block diagonal."""
    return frozenset(
        Root(i, j)
        for i in range(1, comp.n + 1)
        for j in range(i + 1, comp.n + 1)
        if comp.block_of(i) < comp.block_of(j)
    )


@lru_cache(maxsize=None)
def reductive_roots(comp: Composition) -> FrozenSet[Root]:
    """Positive roots of the block diagonal part."""
    return frozenset(
        Root(i, j)
        for i in range(1, comp.n + 1)
        for j in range(i + 1, comp.n + 1)
        if comp.block_of(i) == comp.block_of(j)
    )


@lru_cache(maxsize=None)
def m_prime(comp: Composition) -> FrozenSet[Root]:
    """Roots of M outside the superdiagonal blocks X_{k,k+1}."""
    return frozenset(
        root for root in roots_of_nilradical(comp)
        if comp.block_of(root.j) >= comp.block_of(root.i) + 2
    )


def greater(a: Root, b: Root) -> bool:
    """a > b iff a - b is a positive root: same row further right, or same column higher up."""
    return (a.i == b.i and a.j > b.j) or (a.j == b.j and a.i < b.i)


def prec(a: Root, b: Root) -> bool:
    """a is strictly inside the south-west corner of b."""
    return a.i > b.i and a.j < b.j


def minimal_elements(roots: Iterable[Root]) -> FrozenSet[Root]:
    """Roots of the set with nothing of the set below them."""
    pool = frozenset(roots)
    return frozenset(
        gamma for gamma in pool
        if not any(greater(gamma, xi) for xi in pool)
    )


# ----------------------------
# Base
# ----------------------------


@dataclass(frozen=True)
class BaseLayers:
    """The base S as the ordered layers S_1, S_2, ... produced by minimal-element stripping."""

    layers: Tuple[FrozenSet[Root], ...]

    @cached_property
    def roots(self) -> FrozenSet[Root]:
        return frozenset().union(*self.layers) if self.layers else frozenset()

    def layer_of(self, root: Root) -> int:
        """1-based layer index of a base root."""
        for index, layer in enumerate(self.layers, start=1):
            if root in layer:
                return index
        raise KeyError(f"{root} is not in the base")

    def ordered(self) -> List[Root]:
        """Base roots by layer, then lexicographically."""
        return [root for layer in self.layers for root in sorted(layer)]

    def __contains__(self, root: Root) -> bool:
        return root in self.roots

    def __len__(self) -> int:
        return len(self.roots)


def is_base(comp: Composition, candidate: Iterable[Root]) -> bool:
    """
    Check both clauses of the base definition.

    Args:
        comp: The composition
        candidate: Proposed subset of M

    Returns:
        bool: True if the roots are pairwise incomparable and every other root
        of M dominates one of them
    """
    nilradical = roots_of_nilradical(comp)
    chosen = frozenset(candidate)
    if not chosen <= nilradical:
        return False

    for a, b in itertools.combinations(chosen, 2):
        if greater(a, b) or greater(b, a):
            return False

    return all(
        any(greater(gamma, xi) for xi in chosen)
        for gamma in nilradical - chosen
    )


@lru_cache(maxsize=None)
def compute_base(comp: Composition) -> BaseLayers:
    """
    Compute the base by layered stripping.

    Each round takes the minimal elements of what is left as the next layer,
    then removes them together with every root lying above one of them.

    Args:
        comp: The composition

    Returns:
        BaseLayers: The layers S_1, S_2, ...

    Raises:
        BaseInvariantViolation: If the result does not satisfy the base definition
    """
    remaining = set(roots_of_nilradical(comp))
    layers: List[FrozenSet[Root]] = []

    while remaining:
        layer = minimal_elements(remaining)
        dominated = {gamma for gamma in remaining if any(greater(gamma, xi) for xi in layer)}
        remaining -= layer | dominated
        layers.append(layer)

    base = BaseLayers(tuple(layers))
    if not is_base(comp, base.roots):
        raise BaseInvariantViolation(f"Stripping produced a set that is not a base for {comp}")

    logger.debug(f"Base for {comp}: {[sorted(map(str, layer)) for layer in layers]}")
    return base


def antidiagonal_check(comp: Composition, base: BaseLayers) -> bool:
    """True iff the antidiagonal of every block X_{k,k+1}, read from its lower-left corner, lies in S."""
    R = comp.partial_sums
    for k in range(1, comp.s):
        depth = min(comp.sizes[k - 1], comp.sizes[k])
        for t in range(depth):
            if Root(R[k] - t, R[k] + 1 + t) not in base:
                return False
    return True


# ----------------------------
# Admissible pairs and broad base
# ----------------------------


@dataclass(frozen=True)
class AdmissiblePair:
    """Base roots xi, xi' chained through a reductive root alpha; phi = alpha + xi'."""

    xi: Root
    xi_prime: Root
    alpha: Root
    phi: Root

    def __post_init__(self):
        if not self.xi.j < self.xi_prime.i:
            raise BadRoot(f"{self.xi} and {self.xi_prime} cannot be chained")
        if self.alpha != Root(self.xi.j, self.xi_prime.i) or self.phi != self.alpha + self.xi_prime:
            raise BadRoot(f"Inconsistent admissible pair {self.xi}, {self.xi_prime}")

    @classmethod
    def from_roots(cls, xi: Root, xi_prime: Root) -> "AdmissiblePair":
        alpha = Root(xi.j, xi_prime.i)
        return cls(xi=xi, xi_prime=xi_prime, alpha=alpha, phi=alpha + xi_prime)


@lru_cache(maxsize=None)
def _admissible_pairs(comp: Composition, base: BaseLayers) -> Tuple[AdmissiblePair, ...]:
    delta_r = reductive_roots(comp)
    ordered = base.ordered()
    pairs = [
        AdmissiblePair.from_roots(xi, xi_prime)
        for xi_prime in ordered
        for xi in ordered
        if xi.j < xi_prime.i and Root(xi.j, xi_prime.i) in delta_r
    ]

    seen: Dict[Root, AdmissiblePair] = {}
    for pair in pairs:
        if pair.phi in seen:
            other = seen[pair.phi]
            raise DuplicatePhi(
                f"Pairs ({other.xi},{other.xi_prime}) and ({pair.xi},{pair.xi_prime}) both give phi={pair.phi}"
            )
        seen[pair.phi] = pair
    return tuple(pairs)


def admissible_pairs(comp: Composition, base: BaseLayers) -> List[AdmissiblePair]:
    """
    All admissible pairs of base roots.

    Pairs are ordered by xi' and then xi, both in base order.

    Raises:
        DuplicatePhi: If two pairs produce the same phi
    """
    return list(_admissible_pairs(comp, base))


@lru_cache(maxsize=None)
def broad_base(comp: Composition, base: BaseLayers) -> FrozenSet[Root]:
    """
    The broad base T.

    T is S together with every root of M lying above or to the right of a base
    root inside the same block X_{k,l}.

    Raises:
        BaseInvariantViolation: If some root of M outside M' is missed
    """
    S = base.roots
    extra = frozenset(
        xi for xi in roots_of_nilradical(comp)
        if any(greater(xi, gamma) and comp.cell_block(xi) == comp.cell_block(gamma) for gamma in S)
    )
    broad = S | extra

    missing = roots_of_nilradical(comp) - m_prime(comp) - broad
    if missing:
        raise BaseInvariantViolation(
            f"Broad base of {comp} misses superdiagonal roots {sorted(map(str, missing))}"
        )
    return broad


# ----------------------------
# Remoteness and the corner relation
# ----------------------------


@lru_cache(maxsize=None)
def remoteness_map(comp: Composition) -> Dict[Root, int]:
    """Remoteness of every root of M: the root count of the longest descending chain inside M."""
    nilradical = roots_of_nilradical(comp)
    # a > b forces a strictly wider cell, so widths give a topological order
    ordered = sorted(nilradical, key=lambda root: (root.j - root.i, root))
    result: Dict[Root, int] = {}
    for gamma in ordered:
        below = [result[delta] for delta in result if greater(gamma, delta)]
        result[gamma] = 1 + max(below, default=0)
    return result


def remoteness(comp: Composition, gamma: Root) -> int:
    """
    Remoteness of a root of M.

    Raises:
        RootNotInM: If gamma is not a root of the nilradical
    """
    table = remoteness_map(comp)
    if gamma not in table:
        raise RootNotInM(f"{gamma} is not in M for {comp}")
    return table[gamma]


def prec_maximal_in_S(gamma: Root, base: BaseLayers) -> FrozenSet[Root]:
    """The prec-maximal base roots strictly inside the corner of gamma."""
    inside = [phi for phi in base.roots if prec(phi, gamma)]
    return frozenset(
        phi for phi in inside
        if not any(prec(phi, psi) for psi in inside)
    )


# ----------------------------
# Generator set
# ----------------------------


@dataclass(frozen=True)
class GeneratorSet:
    """Every root set attached to a composition."""

    composition: Composition
    nilradical: FrozenSet[Root]
    delta_r: FrozenSet[Root]
    base: BaseLayers
    pairs: Tuple[AdmissiblePair, ...]
    broad: FrozenSet[Root]
    m_prime: FrozenSet[Root]

    def __post_init__(self):
        S = self.base.roots
        if not (S <= self.broad <= self.nilradical):
            raise BaseInvariantViolation(f"Expected S within T within M for {self.composition}")
        if not (self.nilradical - self.m_prime) <= self.broad:
            raise BaseInvariantViolation(f"Expected M minus M' within T for {self.composition}")
        if self.phi & S:
            raise BaseInvariantViolation(
                f"Phi meets the base at {sorted(map(str, self.phi & S))} for {self.composition}"
            )
        if len(self.phi) != len(self.pairs):
            raise DuplicatePhi(f"Phi has fewer roots than there are admissible pairs for {self.composition}")

    @property
    def S(self) -> FrozenSet[Root]:
        return self.base.roots

    @property
    def phi(self) -> FrozenSet[Root]:
        return frozenset(pair.phi for pair in self.pairs)

    @property
    def extended_base(self) -> FrozenSet[Root]:
        return self.S | self.phi

    def ordered_broad(self) -> List[Root]:
        """T ordered by remoteness, then lexicographically."""
        table = remoteness_map(self.composition)
        return sorted(self.broad, key=lambda root: (table[root], root))


@lru_cache(maxsize=None)
def build_generator_set(comp: Composition) -> GeneratorSet:
    """Compute every root set for a composition and check how they fit together."""
    base = compute_base(comp)
    pairs = _admissible_pairs(comp, base)
    generator_set = GeneratorSet(
        composition=comp,
        nilradical=roots_of_nilradical(comp),
        delta_r=reductive_roots(comp),
        base=base,
        pairs=pairs,
        broad=broad_base(comp, base),
        m_prime=m_prime(comp),
    )
    logger.info(
        f"Root sets for {comp}: |M|={len(generator_set.nilradical)}, |S|={len(base)}, "
        f"|Phi|={len(pairs)}, |T|={len(generator_set.broad)}"
    )
    return generator_set
