#!/usr/bin/env python3
"""
parinv Command-Line Entry Point

Loads configuration, parses flags, runs the requested subcommand and writes
its document to stdout or --output. Logs go to stderr.

Exit codes: 0 success, 1 verification failures, 2 errors (reported as a
JSON error document on stderr).
"""

import logging
import sys
from typing import List, Optional

from parinv.cli.app import build_run_config, create_parser
from parinv.cli.commands import EXIT_ERROR, HANDLERS
from parinv.config import init_config
from parinv.errors import ParinvError
from parinv.schemas import ErrorModel

logger = logging.getLogger(__name__)


def _report_error(code: str, detail: str) -> int:
    sys.stderr.write(ErrorModel(error=code, detail=detail).model_dump_json() + "\n")
    return EXIT_ERROR


def main(argv: Optional[List[str]] = None) -> int:
    """Run one parinv command and return its exit code."""
    args = create_parser().parse_args(argv)

    # Configuration first: invalid environment settings stop the run
    try:
        init_config()
    except ValueError as e:
        logger.error(f"Configuration error: {e}")
        return _report_error("bad_configuration", str(e))

    try:
        cfg = build_run_config(args)
        logger.info(f"Running '{cfg.command}'")
        result = HANDLERS[cfg.command](cfg)
    except ParinvError as e:
        logger.error(f"{args.command} failed: {e}")
        sys.stderr.write(ErrorModel(**e.to_dict()).model_dump_json() + "\n")
        return EXIT_ERROR
    except ValueError as e:
        return _report_error("bad_arguments", str(e))

    if cfg.output_path:
        cfg.output_path.write_text(result.output, encoding="utf-8")
        logger.info(f"Wrote {cfg.output_path}")
    else:
        sys.stdout.write(result.output)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
