#!/usr/bin/env python3
"""
rkhsmult - multiplicative functionals on unitarily invariant kernel spaces

Main Application Entry Point
"""

import asyncio
import json
import sys
from pathlib import Path
from typing import Any, Dict, Optional, TextIO, Tuple

import pydantic

from .cli.job import load_job, prepare_job
from .cli.report import ReportDocument
from .core.app_core import RkhsMultCore
from .errors import RkhsMultError
from .utils.config import load_config
from .utils.logger import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INVALID = 2

# Errors caused by the input rather than by a check verdict
INPUT_ERRORS = (RkhsMultError, pydantic.ValidationError, json.JSONDecodeError, OSError)


def _first_line(exc: BaseException) -> str:
    text = str(exc).strip().splitlines()
    return text[0] if text else exc.__class__.__name__


def run_job(path, subcommand: str = 'report', cli_overrides: Optional[Dict[str, Any]] = None,
            settings: Optional[Dict[str, Any]] = None) -> Tuple[ReportDocument, int]:
    """Load, prepare and run a job file; input errors propagate to the caller"""
    settings = settings or load_config()
    path = Path(path)
    config = load_job(path)
    job = prepare_job(config, settings, cli_overrides, subcommand, base_dir=path.parent)
    core = RkhsMultCore(settings)
    report = asyncio.run(core.run(job, subcommand))
    return report, report.exit_code


class RkhsMultApplication:
    """Main rkhsmult Application Class"""

    def __init__(self, stdout: TextIO = None, stderr: TextIO = None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.settings: Optional[Dict[str, Any]] = None
        self.report: Optional[ReportDocument] = None

    def setup(self, settings_overrides: Optional[Dict[str, Any]] = None) -> None:
        """Resolve environment settings and configure logging"""
        self.settings = load_config(settings_overrides)
        setup_logging(self.settings)

    def run(self, config_path, subcommand: str = 'report', cli_overrides: Optional[Dict[str, Any]] = None,
            out: Optional[str] = None, csv_path: Optional[str] = None,
            settings_overrides: Optional[Dict[str, Any]] = None) -> int:
        """Run the application; returns the process exit code"""
        try:
            self.setup(settings_overrides)
            self.report, exit_code = run_job(config_path, subcommand, cli_overrides, self.settings)
            if out:
                self.report.write(out)
            else:
                self.stdout.write(self.report.to_json())
            if csv_path:
                self.report.write_csv(csv_path)
        except INPUT_ERRORS as exc:
            logger.error("Invalid input", error=_first_line(exc), error_type=exc.__class__.__name__)
            self.stderr.write(f"rkhsmult: error: {_first_line(exc)}\n")
            return EXIT_INVALID

        summary = self.report.summary()
        self.stderr.write(f"rkhsmult: {summary['checks']} checks, verdict {summary['verdict']}\n")
        return exit_code


def main(argv=None) -> int:
    """Console entry point"""
    from .launcher import main as launch
    return launch(argv)


if __name__ == "__main__":
    sys.exit(main())
