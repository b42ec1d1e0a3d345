"""
Subcommand Handlers

Each handler takes a validated RunConfig and returns the document to write
together with the exit code.
"""

import logging
from dataclasses import dataclass

from parinv.canonical import canonical_form, express_in_generators, invariant_values
from parinv.cli.io import load_matrix, load_polynomial
from parinv.cli.render import (
    canonicalize_model,
    express_model,
    generator_listing_model,
    generator_set_model,
    render_diagram,
    render_generators,
)
from parinv.cli.app import RunConfig
from parinv.generators import invariant_builder
from parinv.roots import build_generator_set
from parinv.schemas import CanonicalSamplesModel, CertificateModel, VerifySummaryModel
from parinv.verify import VerificationSummary, run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


@dataclass
class CommandResult:
    output: str
    exit_code: int = EXIT_OK


def cmd_diagram(cfg: RunConfig) -> CommandResult:
    gens = build_generator_set(cfg.composition)
    if cfg.output_format == "json":
        return CommandResult(generator_set_model(gens).model_dump_json(indent=2) + "\n")
    return CommandResult(render_diagram(gens))


def cmd_generators(cfg: RunConfig) -> CommandResult:
    builder = invariant_builder(cfg.composition)
    if cfg.output_format == "json":
        return CommandResult(generator_listing_model(builder).model_dump_json(indent=2) + "\n")
    return CommandResult(render_generators(builder))


def summary_model(summary: VerificationSummary) -> VerifySummaryModel:
    """Flatten per-composition reports into the verify document."""
    invariance, certificates, codimension, controls, missing, violations = [], [], [], [], [], []
    checked = degenerate = mismatches = 0

    for report in summary.reports:
        label = "(" + ",".join(map(str, report.composition)) + ")"
        invariance += [f"{label} {failure}" for failure in report.invariance_failures]
        certificates += [
            CertificateModel(
                composition=list(report.composition),
                family=family,
                rank=cert.rank,
                expected_rank=cert.expected_rank,
                variable_count=cert.variable_count,
                trials_used=cert.trials_used,
                valid=cert.valid,
            )
            for family, cert in report.certificates.items()
        ]
        if report.orbit_codimension != report.broad_size:
            codimension.append(f"{label} codimension {report.orbit_codimension}, |T| = {report.broad_size}")
        if report.ring_dimension is not None and report.ring_dimension != report.broad_size:
            codimension.append(f"{label} brute-force dimension {report.ring_dimension}, |T| = {report.broad_size}")
        if report.negative_control:
            controls.append(f"{label} {report.negative_control}")
        elif report.negative_control_needed:
            missing.append(list(report.composition))
        violations += [f"{label} N{root}" for root in report.leading_coefficient_violations]
        checked += report.canonical_checked
        degenerate += report.canonical_degenerate
        mismatches += report.canonical_mismatches

    return VerifySummaryModel(
        n_max=summary.n_max,
        seed=summary.seed,
        compositions_checked=len(summary.reports),
        invariance_failures=invariance,
        independence_certificates=certificates,
        orbit_codimension_mismatches=codimension,
        negative_controls=controls,
        missing_negative_controls=missing,
        leading_coefficient_violations=violations,
        canonical_samples=CanonicalSamplesModel(checked=checked, degenerate=degenerate, mismatches=mismatches),
        failing_compositions=[list(report.composition) for report in summary.reports if report.failed],
        ok=summary.ok,
    )


def cmd_verify(cfg: RunConfig) -> CommandResult:
    summary = run_verification(
        n_max=cfg.n_max,
        seed=cfg.seed,
        trials=cfg.trials,
        workers=cfg.workers,
        samples=cfg.samples,
        degree_bound=cfg.degree_bound,
    )
    model = summary_model(summary)
    if cfg.output_format == "json":
        output = model.model_dump_json(indent=2) + "\n"
    else:
        output = (
            f"compositions checked: {model.compositions_checked}\n"
            f"invariance failures: {len(model.invariance_failures)}\n"
            f"independence certificates: {sum(c.valid for c in model.independence_certificates)}"
            f"/{len(model.independence_certificates)} full rank\n"
            f"canonical samples: {model.canonical_samples.checked} checked, "
            f"{model.canonical_samples.mismatches} mismatched\n"
            f"result: {'ok' if model.ok else 'FAILED'}\n"
        )
    return CommandResult(output, EXIT_OK if summary.ok else EXIT_FAILED)


def cmd_canonicalize(cfg: RunConfig) -> CommandResult:
    builder = invariant_builder(cfg.composition)
    x = load_matrix(cfg.input_path, cfg.composition)
    vector = invariant_values(builder, x)
    point = canonical_form(builder, x)
    return CommandResult(canonicalize_model(builder.gens, point, vector).model_dump_json(indent=2) + "\n")


def cmd_express(cfg: RunConfig) -> CommandResult:
    builder = invariant_builder(cfg.composition)
    f = load_polynomial(cfg.input_path, builder.space)
    expression = express_in_generators(builder, f)
    return CommandResult(express_model(builder, expression).model_dump_json(indent=2) + "\n")


HANDLERS = {
    "diagram": cmd_diagram,
    "generators": cmd_generators,
    "verify": cmd_verify,
    "canonicalize": cmd_canonicalize,
    "express": cmd_express,
}
