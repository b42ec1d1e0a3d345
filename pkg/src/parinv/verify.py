"""
Verification Suite

Machine checks for the generator polynomials:

- invariance as exact polynomial identities in the parameter t
- algebraic independence through exact Jacobian ranks at random points
- small oracles for the transcendence degree of the invariant algebra
- a sweep over every composition up to a given size, optionally fanned out
  over worker processes

Random points come from a seeded random.Random, so reports are reproducible.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from parinv.action import GroupGenerator, GroupTag, act_on_point, act_on_polynomial, group_generators
from parinv.canonical import canonical_form, invariant_values
from parinv.errors import DegenerateOrbit
from parinv.generators import InvariantBuilder, invariant_builder
from parinv.poly import Polynomial, PolynomialSpace, VariableId, polynomial_space, to_qq
from parinv.roots import Composition, enumerate_compositions, roots_of_nilradical

logger = logging.getLogger(__name__)

INITIAL_BOX = 10


@dataclass
class InvarianceReport:
    """Generators of a group that move a polynomial, with the nonzero residuals."""

    polynomial_id: str
    group: GroupTag
    failures: List[Tuple[GroupGenerator, Polynomial]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class IndependenceCertificate:
    """Exact Jacobian rank of a family of polynomials at one point."""

    polynomial_ids: List[str]
    point: Dict[str, Fraction]
    rank: int
    expected_rank: int
    variable_count: int
    trials_used: int

    @property
    def valid(self) -> bool:
        return self.rank == self.expected_rank


def check_invariance(
    f: Polynomial,
    group: Union[GroupTag, str],
    comp: Composition,
    polynomial_id: str = "f",
) -> InvarianceReport:
    """
    Act on f with every one-parameter generator of the group and collect residuals.

    Args:
        f: Polynomial in the matrix entries of comp
        group: N, U or U_L
        comp: The composition
        polynomial_id: Label carried into the report

    Returns:
        InvarianceReport: Empty failures iff f is invariant
    """
    group = GroupTag(group)
    space = polynomial_space(comp)
    report = InvarianceReport(polynomial_id=polynomial_id, group=group)

    for g in group_generators(comp, group):
        residual = act_on_polynomial(space, f, g) - f
        if residual:
            report.failures.append((g, residual))

    if report.failures:
        logger.debug(f"{polynomial_id} is moved by {len(report.failures)} generators of {group.value}")
    return report


def _random_nonzero(rng: random.Random, bound: int) -> int:
    value = rng.randint(1, bound)
    return value if rng.random() < 0.5 else -value


def _rank(rows: List[List[Fraction]], columns: int) -> int:
    if not rows or not columns:
        return 0
    matrix = DomainMatrix([[to_qq(value) for value in row] for row in rows], (len(rows), columns), QQ)
    return matrix.rank()


def check_independence(
    polys: Sequence[Polynomial],
    space: PolynomialSpace,
    trials: int = 3,
    rng: Optional[random.Random] = None,
    ids: Optional[Sequence[str]] = None,
    variables: Optional[Sequence[VariableId]] = None,
) -> IndependenceCertificate:
    """
    Certify algebraic independence by a full-rank Jacobian at a random point.

    Points are drawn from integer boxes [-B, B] without zero, B doubling per
    trial. A full rank at any point proves independence; otherwise the best
    rank is reported as inconclusive.

    Args:
        polys: Nonempty family of polynomials of one space
        space: Their polynomial space
        trials: Number of points to try
        rng: Source of randomness
        ids: Labels for the polynomials
        variables: Variables to differentiate by; defaults to all variables used

    Returns:
        IndependenceCertificate: The best rank found
    """
    if not polys:
        raise ValueError("check_independence needs at least one polynomial")
    rng = rng or random.Random(0)
    ids = list(ids) if ids is not None else [f"f{k}" for k in range(1, len(polys) + 1)]

    used = sorted({var for poly in polys for var in space.variables_of(poly)})
    variables = list(variables) if variables is not None else used
    jacobian = [[space.differentiate(poly, var) for var in variables] for poly in polys]
    assigned = sorted(set(variables) | set(used))

    best_rank, best_point, used_trials = -1, {}, 0
    bound = INITIAL_BOX
    for trial in range(1, trials + 1):
        used_trials = trial
        point = {var: Fraction(_random_nonzero(rng, bound)) for var in assigned}
        rows = [[space.evaluate(entry, point) for entry in row] for row in jacobian]
        rank = _rank(rows, len(variables))
        if rank > best_rank:
            best_rank, best_point = rank, point
        if rank == len(polys):
            break
        bound *= 2
    else:
        logger.warning(f"Independence inconclusive: best rank {best_rank} of {len(polys)} after {trials} trials")

    return IndependenceCertificate(
        polynomial_ids=ids,
        point={var.name: value for var, value in best_point.items()},
        rank=best_rank,
        expected_rank=len(polys),
        variable_count=len(variables),
        trials_used=used_trials,
    )


def check_restriction_independence(
    builder: InvariantBuilder,
    trials: int = 3,
    rng: Optional[random.Random] = None,
) -> IndependenceCertificate:
    """Independence of the M_xi and L_phi restricted to Y, in the slice coordinates."""
    named = builder.base_generators()
    polys = [builder.restrict_to_y(poly) for _, poly in named]
    variables = [VariableId.slice(root) for root in sorted(builder.gens.extended_base)]
    return check_independence(
        polys, builder.space, trials=trials, rng=rng,
        ids=[f"{name}|Y" for name, _ in named], variables=variables,
    )


def brute_force_invariant_ring_dimension(
    builder: InvariantBuilder,
    degree_bound: int = 2,
    point_count: int = 3,
    rng: Optional[random.Random] = None,
) -> int:
    """
    Generic rank of the gradients of all monomials in the N_xi up to a degree.

    Only meant for tiny compositions, n <= 5.
    """
    if builder.comp.n > 5:
        raise ValueError(f"Brute force dimension is limited to n <= 5, got n = {builder.comp.n}")
    rng = rng or random.Random(0)
    space = builder.space
    generators = [poly for _, poly in builder.broad_generators()]
    if not generators:
        return 0

    monomials = [
        _product(space, combo)
        for degree in range(1, degree_bound + 1)
        for combo in itertools.combinations_with_replacement(generators, degree)
    ]
    variables = [VariableId.matrix(root) for root in sorted(builder.gens.nilradical)]
    gradients = [[space.differentiate(mono, var) for var in variables] for mono in monomials]

    best = 0
    for _ in range(point_count):
        point = {var: Fraction(_random_nonzero(rng, INITIAL_BOX)) for var in variables}
        rows = [[space.evaluate(entry, point) for entry in row] for row in gradients]
        best = max(best, _rank(rows, len(variables)))
    return best


def _product(space: PolynomialSpace, factors: Sequence[Polynomial]) -> Polynomial:
    result = space.one
    for factor in factors:
        result *= factor
    return result


def generic_orbit_codimension(comp: Composition, rng: Optional[random.Random] = None) -> int:
    """
    dim m minus the rank of x -> [E_{u,v}, x] over (u, v) in M at a random point.

    This is the transcendence degree of the field of U-invariants.
    """
    rng = rng or random.Random(0)
    nilradical = sorted(roots_of_nilradical(comp))
    if not nilradical:
        return 0
    n = comp.n
    x = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for root in nilradical:
        x[root.i][root.j] = Fraction(_random_nonzero(rng, INITIAL_BOX))

    rows = []
    for direction in nilradical:
        u, v = direction.i, direction.j
        rows.append([
            (x[v][root.j] if root.i == u else 0) - (x[root.i][u] if root.j == v else 0)
            for root in nilradical
        ])
    return len(nilradical) - _rank(rows, len(nilradical))


# ----------------------------
# Sweep
# ----------------------------


@dataclass
class CompositionReport:
    """Everything checked for one composition."""

    composition: Tuple[int, ...]
    invariance_failures: List[str] = field(default_factory=list)
    certificates: Dict[str, IndependenceCertificate] = field(default_factory=dict)
    broad_size: int = 0
    orbit_codimension: int = 0
    negative_control: Optional[str] = None
    negative_control_needed: bool = False
    leading_coefficient_violations: List[str] = field(default_factory=list)
    canonical_checked: int = 0
    canonical_degenerate: int = 0
    canonical_mismatches: int = 0
    ring_dimension: Optional[int] = None

    @property
    def failed(self) -> bool:
        return bool(
            self.invariance_failures
            or any(not cert.valid for cert in self.certificates.values())
            or self.orbit_codimension != self.broad_size
            or (self.ring_dimension is not None and self.ring_dimension != self.broad_size)
            or (self.negative_control_needed and self.negative_control is None)
            or self.leading_coefficient_violations
            or self.canonical_mismatches
        )


@dataclass
class VerificationSummary:
    n_max: int
    seed: int
    reports: List[CompositionReport]

    @property
    def failures(self) -> int:
        return sum(1 for report in self.reports if report.failed)

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _random_point(comp: Composition, rng: random.Random, bound: int = 5) -> List[List[Fraction]]:
    n = comp.n
    x = [[Fraction(0)] * n for _ in range(n)]
    for root in roots_of_nilradical(comp):
        x[root.i - 1][root.j - 1] = Fraction(_random_nonzero(rng, bound))
    return x


def _random_word(comp: Composition, rng: random.Random, max_length: int = 5) -> List[GroupGenerator]:
    cells = sorted(roots_of_nilradical(comp))
    return [
        GroupGenerator(root.i, root.j, Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
        for root in (rng.choice(cells) for _ in range(rng.randint(1, max_length)))
    ]


def _check_canonical_samples(builder: InvariantBuilder, rng: random.Random, samples: int, report: CompositionReport):
    comp = builder.comp
    if not builder.gens.nilradical:
        return
    for _ in range(samples):
        x = _random_point(comp, rng)
        try:
            z = canonical_form(builder, x)
        except DegenerateOrbit:
            report.canonical_degenerate += 1
            continue

        moved = x
        for g in _random_word(comp, rng):
            moved = act_on_point(comp, moved, g)

        report.canonical_checked += 1
        round_trip = invariant_values(builder, z.to_matrix(comp.n)).values == invariant_values(builder, x).values
        if canonical_form(builder, moved).coords != z.coords or not round_trip:
            report.canonical_mismatches += 1


def verify_composition(
    comp: Composition,
    seed: int,
    trials: int = 3,
    samples: int = 5,
    degree_bound: int = 0,
) -> CompositionReport:
    """
    Run every check on one composition with its own seeded random stream.

    With a positive degree bound, compositions of n <= 5 also get the
    brute-force dimension oracle.
    """
    rng = random.Random(f"{seed}:{comp}")
    builder = invariant_builder(comp)
    gens = builder.gens
    report = CompositionReport(composition=comp.sizes, broad_size=len(gens.broad))

    for name, poly in builder.base_generators():
        result = check_invariance(poly, GroupTag.N, comp, polynomial_id=name)
        report.invariance_failures += [f"{name} moved by {g}" for g, _ in result.failures]

    broad = builder.broad_generators()
    for xi, poly in broad:
        result = check_invariance(poly, GroupTag.U, comp, polynomial_id=f"N{xi}")
        report.invariance_failures += [f"N{xi} moved by {g}" for g, _ in result.failures]

    if gens.nilradical:
        named = builder.base_generators()
        report.certificates["base"] = check_independence(
            [poly for _, poly in named], builder.space, trials=trials, rng=rng, ids=[name for name, _ in named],
        )
        report.certificates["broad"] = check_independence(
            [poly for _, poly in broad], builder.space, trials=trials, rng=rng, ids=[f"N{xi}" for xi, _ in broad],
        )
        report.certificates["restriction"] = check_restriction_independence(builder, trials=trials, rng=rng)

    report.orbit_codimension = generic_orbit_codimension(comp, rng)

    outside = sorted(gens.nilradical - gens.broad)
    report.negative_control_needed = bool(outside)
    for gamma in outside:
        result = check_invariance(builder.space.x(gamma), GroupTag.U, comp, polynomial_id=f"x{gamma}")
        if result.failures:
            report.negative_control = f"x{gamma} moved by {result.failures[0][0]}"
            break

    report.leading_coefficient_violations = [str(xi) for xi in builder.leading_coefficient_violations()]
    _check_canonical_samples(builder, rng, samples, report)

    if degree_bound > 0 and comp.n <= 5:
        report.ring_dimension = brute_force_invariant_ring_dimension(builder, degree_bound, rng=rng)

    level = logging.ERROR if report.failed else logging.DEBUG
    logger.log(level, f"Composition {comp}: {'FAILED' if report.failed else 'ok'}")
    return report


def _verify_task(args: Tuple[Tuple[int, ...], int, int, int, int]) -> CompositionReport:
    sizes, seed, trials, samples, degree_bound = args
    return verify_composition(Composition(sizes), seed, trials, samples, degree_bound)


def run_verification(
    n_max: int,
    seed: int,
    trials: int = 3,
    workers: int = 1,
    samples: int = 5,
    degree_bound: int = 0,
) -> VerificationSummary:
    """
    Verify every composition of every n up to n_max.

    Reports come back in composition order whatever the worker count.
    """
    tasks = [
        (comp.sizes, seed, trials, samples, degree_bound)
        for n in range(1, n_max + 1)
        for comp in enumerate_compositions(n)
    ]
    logger.info(f"Verifying {len(tasks)} compositions up to n = {n_max} with {workers} worker(s)")

    if workers > 1:
        with Pool(workers) as pool:
            reports = pool.map(_verify_task, tasks)
    else:
        reports = [_verify_task(task) for task in tasks]

    summary = VerificationSummary(n_max=n_max, seed=seed, reports=list(reports))
    logger.info(f"Verification finished: {summary.failures} failing composition(s)")
    return summary
