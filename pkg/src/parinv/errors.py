"""
Typed Errors for parinv

Every failure the toolkit reports on purpose is a ParinvError carrying a
machine-readable code, so the command line can turn it into a stable
JSON error document.
"""

from typing import Any, Dict


class ParinvError(Exception):
    """Base class for all reported errors."""

    code: str = "parinv_error"

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.code, "detail": str(self)}


class BadComposition(ParinvError, ValueError):
    code = "bad_composition"


class BadRoot(ParinvError, ValueError):
    code = "bad_root"


class RootNotInM(ParinvError):
    code = "root_not_in_m"


class RootNotInT(ParinvError):
    code = "root_not_in_t"


class DuplicatePhi(ParinvError):
    """Two admissible pairs produced the same root phi."""

    code = "duplicate_phi"


class BaseInvariantViolation(ParinvError):
    """A structural property of S, Phi or T failed to hold."""

    code = "base_invariant_violation"


class BadPolynomial(ParinvError, ValueError):
    code = "bad_polynomial"


class MissingAssignment(ParinvError):
    code = "missing_assignment"


class LeavesNilradical(ParinvError):
    """Conjugation produced a nonzero entry outside M."""

    code = "leaves_nilradical"


class BadMatrix(ParinvError, ValueError):
    code = "bad_matrix"


class DegenerateOrbit(ParinvError):
    """A leading coefficient vanished during the triangular solve."""

    code = "degenerate_orbit"


class NotInvariant(ParinvError):
    code = "not_invariant"


class NonMonomialDenominator(ParinvError):
    code = "non_monomial_denominator"
