"""
parinv: invariants of the unipotent radical of a parabolic subgroup of GL(n)

This package contains the root combinatorics of a block composition, exact
polynomial arithmetic, the adjoint action on the nilradical, the generator
polynomials, canonical forms on the slice and the verification suite.
"""

from .action import GroupGenerator, GroupTag, act_on_point, act_on_polynomial, conjugate
from .canonical import canonical_form, express_in_generators, invariant_values, reconstruct_canonical
from .errors import ParinvError
from .generators import InvariantBuilder, invariant_builder
from .poly import PolynomialSpace, VariableId, polynomial_space
from .roots import Composition, Root, build_generator_set, compute_base
from .verify import check_independence, check_invariance, run_verification

__all__ = [
    "GroupGenerator",
    "GroupTag",
    "act_on_point",
    "act_on_polynomial",
    "conjugate",
    "canonical_form",
    "express_in_generators",
    "invariant_values",
    "reconstruct_canonical",
    "ParinvError",
    "InvariantBuilder",
    "invariant_builder",
    "PolynomialSpace",
    "VariableId",
    "polynomial_space",
    "Composition",
    "Root",
    "build_generator_set",
    "compute_base",
    "check_independence",
    "check_invariance",
    "run_verification"
]
