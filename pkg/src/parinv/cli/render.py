"""
Rendering of root sets and generator polynomials, as text grids and as
JSON documents.
"""

from typing import Dict, List

from parinv.canonical import CanonicalPoint, Expression, InvariantVector
from parinv.generators import InvariantBuilder
from parinv.poly import Polynomial, PolynomialSpace, format_rational
from parinv.roots import GeneratorSet, Root, remoteness_map
from parinv.schemas import (
    CanonicalizeModel,
    ExpressModel,
    GeneratorListingModel,
    GeneratorSetModel,
    NamedPolynomialModel,
    PairModel,
    PolynomialModel,
)


# ----------------------------
# Diagrams
# ----------------------------


def _grid(gens: GeneratorSet, marker) -> List[str]:
    comp = gens.composition
    lines = []
    for a in range(1, comp.n + 1):
        cells = []
        for b in range(1, comp.n + 1):
            root = Root(a, b) if a < b else None
            cells.append(marker(root) if root in gens.nilradical else ".")
        lines.append(" ".join(cells))
    return lines


def render_diagram(gens: GeneratorSet) -> str:
    """
    Two n x n grids.

    The first marks the base (S) and Phi (X), the second the base (S) and the
    rest of the broad base (T); other cells of M are "o", cells outside M ".".
    """
    phi = gens.phi

    def base_marker(root: Root) -> str:
        if root in gens.S:
            return "S"
        return "X" if root in phi else "o"

    def broad_marker(root: Root) -> str:
        if root in gens.S:
            return "S"
        return "T" if root in gens.broad else "o"

    lines = [f"blocks {gens.composition}", "", "base and phi:"]
    lines += _grid(gens, base_marker)
    lines += ["", "broad base:"]
    lines += _grid(gens, broad_marker)
    return "\n".join(lines) + "\n"


def generator_set_model(gens: GeneratorSet) -> GeneratorSetModel:
    return GeneratorSetModel(
        composition=list(gens.composition.sizes),
        M=[root.as_list() for root in sorted(gens.nilradical)],
        S_layers=[[root.as_list() for root in sorted(layer)] for layer in gens.base.layers],
        pairs=[
            PairModel(
                xi=pair.xi.as_list(),
                xi_prime=pair.xi_prime.as_list(),
                alpha=pair.alpha.as_list(),
                phi=pair.phi.as_list(),
            )
            for pair in gens.pairs
        ],
        phi=[pair.phi.as_list() for pair in gens.pairs],
        T=[root.as_list() for root in gens.ordered_broad()],
        M_prime=[root.as_list() for root in sorted(gens.m_prime)],
    )


# ----------------------------
# Polynomials
# ----------------------------


def polynomial_model(space: PolynomialSpace, p: Polynomial) -> PolynomialModel:
    return PolynomialModel(text=space.render(p), terms=space.to_terms(p))


def generator_listing_model(builder: InvariantBuilder) -> GeneratorListingModel:
    gens, space = builder.gens, builder.space
    return GeneratorListingModel(
        composition=list(gens.composition.sizes),
        minors=[
            NamedPolynomialModel(name=f"M{xi}", root=xi.as_list(), polynomial=polynomial_model(space, builder.minor_m(xi)))
            for xi in gens.base.ordered()
        ],
        l_polynomials=[
            NamedPolynomialModel(name=f"L{pair.phi}", root=pair.phi.as_list(), polynomial=polynomial_model(space, builder.l_poly(pair)))
            for pair in gens.pairs
        ],
        n_polynomials=[
            NamedPolynomialModel(name=f"N{xi}", root=xi.as_list(), polynomial=polynomial_model(space, poly))
            for xi, poly in builder.broad_generators()
        ],
    )


def render_generators(builder: InvariantBuilder) -> str:
    """Text listing: M by layer then lex, L by pair, N by remoteness then lex."""
    listing = generator_listing_model(builder)
    table = remoteness_map(builder.comp)
    lines = [f"blocks {builder.comp}"]
    for title, entries in (("minors", listing.minors), ("l-polynomials", listing.l_polynomials), ("n-polynomials", listing.n_polynomials)):
        lines += ["", f"{title} ({len(entries)}):"]
        for entry in entries:
            suffix = ""
            if title == "n-polynomials":
                suffix = f"    [remoteness {table[Root(*entry.root)]}]"
            lines.append(f"  {entry.name} = {entry.polynomial.text}{suffix}")
    return "\n".join(lines) + "\n"


# ----------------------------
# Canonical forms and expressions
# ----------------------------


def _by_root(values: Dict[Root, object], order: List[Root]) -> Dict[str, str]:
    return {str(root): format_rational(values[root]) for root in order}


def canonicalize_model(gens: GeneratorSet, point: CanonicalPoint, vector: InvariantVector) -> CanonicalizeModel:
    order = gens.ordered_broad()
    return CanonicalizeModel(
        composition=list(gens.composition.sizes),
        canonical=_by_root(point.coords, order),
        invariants=_by_root(vector.values, order),
    )


def express_model(builder: InvariantBuilder, expression: Expression) -> ExpressModel:
    return ExpressModel(
        composition=list(builder.comp.sizes),
        numerator=polynomial_model(builder.space, expression.numerator),
        denominator=polynomial_model(builder.space, expression.denominator),
    )
