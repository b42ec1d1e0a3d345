"""
JSON Documents

Pydantic models for every document the command line reads or writes.
Rationals travel as "p/q" strings ("p" for integers) and roots as [i, j].
"""

from typing import Dict, List, Tuple

from pydantic import BaseModel, RootModel

Term = Tuple[List[Tuple[str, int]], str]


# ----------------------------
# Root sets
# ----------------------------


class PairModel(BaseModel):
    xi: List[int]
    xi_prime: List[int]
    alpha: List[int]
    phi: List[int]


class GeneratorSetModel(BaseModel):
    composition: List[int]
    M: List[List[int]]
    S_layers: List[List[List[int]]]
    pairs: List[PairModel]
    phi: List[List[int]]
    T: List[List[int]]
    M_prime: List[List[int]]


# ----------------------------
# Polynomials
# ----------------------------


class PolynomialModel(BaseModel):
    text: str
    terms: List[Term]


class NamedPolynomialModel(BaseModel):
    name: str
    root: List[int]
    polynomial: PolynomialModel


class GeneratorListingModel(BaseModel):
    composition: List[int]
    minors: List[NamedPolynomialModel]
    l_polynomials: List[NamedPolynomialModel]
    n_polynomials: List[NamedPolynomialModel]


class PolynomialInput(BaseModel):
    """Input for express: a term list over the x_{i,j}."""

    terms: List[Term]


# ----------------------------
# Verification
# ----------------------------


class CertificateModel(BaseModel):
    composition: List[int]
    family: str
    rank: int
    expected_rank: int
    variable_count: int
    trials_used: int
    valid: bool


class CanonicalSamplesModel(BaseModel):
    checked: int
    degenerate: int
    mismatches: int


class VerifySummaryModel(BaseModel):
    n_max: int
    seed: int
    compositions_checked: int
    invariance_failures: List[str]
    independence_certificates: List[CertificateModel]
    orbit_codimension_mismatches: List[str]
    negative_controls: List[str]
    missing_negative_controls: List[List[int]]
    leading_coefficient_violations: List[str]
    canonical_samples: CanonicalSamplesModel
    failing_compositions: List[List[int]]
    ok: bool


# ----------------------------
# Canonical forms and expressions
# ----------------------------


class MatrixFile(RootModel[List[List[str]]]):
    """An n x n grid of "p/q" strings."""


class CanonicalizeModel(BaseModel):
    composition: List[int]
    canonical: Dict[str, str]
    invariants: Dict[str, str]


class ExpressModel(BaseModel):
    composition: List[int]
    numerator: PolynomialModel
    denominator: PolynomialModel


class ErrorModel(BaseModel):
    error: str
    detail: str
