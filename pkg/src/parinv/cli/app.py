"""
Command-Line Parser Factory for parinv

This module assembles the argument parser with its subcommands and turns
parsed arguments plus the loaded configuration into a validated RunConfig.
"""

import argparse
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from parinv.config import ParinvConfig, get_config
from parinv.errors import BadComposition
from parinv.roots import Composition

logger = logging.getLogger(__name__)

NEEDS_BLOCKS = ("diagram", "generators", "canonicalize", "express")
NEEDS_INPUT = ("canonicalize", "express")


@dataclass
class RunConfig:
    """Validated settings for one command run."""

    command: str
    composition: Optional[Composition] = None
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None
    output_format: str = "text"
    seed: int = 42
    n_max: int = 6
    degree_bound: int = 0
    samples: int = 5
    trials: int = 3
    workers: int = 1
    n_limit: int = 12
    allow_large: bool = False

    def __post_init__(self):
        """Validate the run settings against the size limit."""
        if self.command in NEEDS_BLOCKS and self.composition is None:
            raise BadComposition(f"'{self.command}' needs --blocks")

        if self.command in NEEDS_INPUT and self.input_path is None:
            raise ValueError(f"'{self.command}' needs --input")

        if self.command == "verify" and self.n_max < 1:
            raise ValueError(f"--n-max must be at least 1, got {self.n_max}")

        size = self.n_max if self.command == "verify" else self.composition.n
        if size > self.n_limit:
            if not self.allow_large:
                raise BadComposition(
                    f"n = {size} exceeds the limit {self.n_limit}. "
                    f"Pass --allow-large or raise PARINV_N_LIMIT."
                )
            logger.warning(f"n = {size} is above the limit {self.n_limit}; symbolic minors may be slow")

        if self.degree_bound < 0 or self.samples < 0:
            raise ValueError("--degree-bound and --samples must be non-negative")

        if self.workers < 1:
            raise ValueError(f"Invalid worker count {self.workers}")


def create_parser() -> argparse.ArgumentParser:
    """
    Create the argument parser with one subcommand per operation.

    Returns:
        argparse.ArgumentParser: Parser for the parinv command
    """
    parser = argparse.ArgumentParser(
        prog="parinv",
        description="Invariants of the unipotent radical acting on a parabolic nilradical of gl(n).",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", type=Path, help="Write the result here instead of stdout")
    common.add_argument("--format", dest="output_format", choices=("text", "json"), default="text",
                        help="Output format for diagram and generators (default: text)")
    common.add_argument("--allow-large", action="store_true",
                        help="Allow n above the configured limit (slow)")

    blocks = argparse.ArgumentParser(add_help=False)
    blocks.add_argument("--blocks", required=True,
                        help="Block sizes, e.g. 2,1,3,2")

    subparsers.add_parser("diagram", parents=[common, blocks],
                          help="Draw the base, Phi and broad base as grids")
    subparsers.add_parser("generators", parents=[common, blocks],
                          help="List the M, L and N generator polynomials")

    verify = subparsers.add_parser("verify", parents=[common],
                                   help="Run the invariance and independence sweep")
    verify.add_argument("--n-max", type=int, default=6, help="Largest n to sweep (default: 6)")
    verify.add_argument("--seed", type=int, help="Random seed (default: PARINV_SEED)")
    verify.add_argument("--degree-bound", type=int, default=0,
                        help="Degree bound for the brute-force dimension oracle on n <= 5 (0 disables)")
    verify.add_argument("--samples", type=int, default=5, help="Canonical form samples per composition")
    verify.add_argument("--workers", type=int, help="Worker processes (default: PARINV_WORKERS)")

    for name, help_text in (
        ("canonicalize", "Canonical point of a matrix on the slice Z"),
        ("express", "Express a U-invariant polynomial in the N generators"),
    ):
        sub = subparsers.add_parser(name, parents=[common, blocks], help=help_text)
        sub.add_argument("--input", dest="input_path", type=Path, required=True, help="JSON input file")

    return parser


def build_run_config(args: argparse.Namespace, config: Optional[ParinvConfig] = None) -> RunConfig:
    """Combine parsed flags with the loaded configuration; flags win."""
    config = config or get_config()
    return RunConfig(
        command=args.command,
        composition=Composition.parse(args.blocks) if getattr(args, "blocks", None) else None,
        input_path=getattr(args, "input_path", None),
        output_path=args.output,
        output_format=args.output_format,
        seed=config.seed if getattr(args, "seed", None) is None else args.seed,
        n_max=getattr(args, "n_max", 6),
        degree_bound=getattr(args, "degree_bound", 0),
        samples=getattr(args, "samples", 5),
        trials=config.independence_trials,
        workers=config.workers if getattr(args, "workers", None) is None else args.workers,
        n_limit=config.n_limit,
        allow_large=args.allow_large,
    )
