"""
Loading of JSON input files: rational matrices for canonicalize and term
lists for express.
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import List

from pydantic import ValidationError

from parinv.action import check_support
from parinv.errors import BadMatrix, BadPolynomial
from parinv.poly import Polynomial, PolynomialSpace, VariableKind
from parinv.roots import Composition
from parinv.schemas import MatrixFile, PolynomialInput

logger = logging.getLogger(__name__)


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise BadMatrix(f"Cannot read {path}: {e}")


def load_matrix(path: Path, comp: Composition) -> List[List[Fraction]]:
    """
    Read an n x n grid of "p/q" strings supported on M.

    Raises:
        BadMatrix: On unreadable files, bad entries, wrong shape or support outside M
    """
    try:
        grid = MatrixFile.model_validate_json(_read(path)).root
    except ValidationError as e:
        raise BadMatrix(f"{path} is not a JSON grid of strings: {e.error_count()} problem(s)")

    try:
        matrix = [[Fraction(entry) for entry in row] for row in grid]
    except (ValueError, ZeroDivisionError) as e:
        raise BadMatrix(f"{path} holds an entry that is not a rational: {e}")

    check_support(comp, matrix)
    logger.debug(f"Loaded {comp.n} x {comp.n} matrix from {path}")
    return matrix


def load_polynomial(path: Path, space: PolynomialSpace) -> Polynomial:
    """
    Read a term list over the matrix entries.

    Raises:
        BadPolynomial: On unreadable files or malformed terms
        RootNotInM: If a variable names a cell outside M
    """
    try:
        document = PolynomialInput.model_validate_json(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise BadPolynomial(f"Cannot read {path}: {e}")
    except ValidationError as e:
        raise BadPolynomial(f"{path} is not a term list: {e.error_count()} problem(s)")

    p = space.from_terms(document.terms)
    foreign = [var.name for var in space.variables_of(p) if var.kind is not VariableKind.MATRIX]
    if foreign:
        raise BadPolynomial(f"Only matrix entries x_{{i,j}} may appear, found {', '.join(foreign)}")
    return p

