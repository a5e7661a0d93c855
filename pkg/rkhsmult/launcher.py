#!/usr/bin/env python3
"""
Command line launcher for rkhsmult

    rkhsmult <subcommand> --config job.json [--degree N] [--tol T]
             [--mode exact|float] [--out report.json] [--csv residuals.csv]
"""

import argparse
import importlib
import sys
from typing import Any, Dict, List, Optional

from . import __version__

SUBCOMMANDS = {
    'cnp': 'CNP transform of every kernel, with the b_n table and verdict',
    'verify': 'kernel-side criteria (power, Schur product, tensor product)',
    'norm': 'truncated functional norms and inverse-kernel membership',
    'identity': 'coefficient identity sweeps and brute-force multiplicativity',
    'report': 'every check declared in the job',
}

REQUIRED_PACKAGES = ('numpy', 'pydantic', 'structlog')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='rkhsmult',
        description='Multiplicative functionals and complete Nevanlinna-Pick kernels on the unit ball',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  rkhsmult cnp --config configs/demo.json
  rkhsmult verify --config configs/demo.json --mode float --tol 1e-8
  rkhsmult report --config configs/demo.json --out report.json --csv residuals.csv

Exit codes: 0 pass, 1 check failure, 2 invalid input.
        """
    )
    parser.add_argument('--version', action='version', version=f'rkhsmult {__version__}')

    subparsers = parser.add_subparsers(dest='subcommand', metavar='subcommand', required=True)
    for name, help_text in SUBCOMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text, description=help_text)
        sub.add_argument('--config', required=True, help='Job file (JSON)')
        sub.add_argument('--degree', type=int, help='Truncation degree N')
        sub.add_argument('--tol', type=float, help='Residual tolerance')
        sub.add_argument('--mode', choices=['exact', 'float'], help='Arithmetic mode')
        sub.add_argument('--out', help='Write the JSON report here instead of standard output')
        sub.add_argument('--csv', help='Also export per-sample criterion residuals as CSV')
        sub.add_argument('--dense', action='store_true', help='Use the dense sample sweep')
        sub.add_argument('--timing', action='store_true', help='Add timing to the report')
        sub.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                         help='Logging level for diagnostics on standard error')
    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments"""
    return build_parser().parse_args(argv)


def apply_arguments(args: argparse.Namespace) -> Dict[str, Dict[str, Any]]:
    """Split arguments into job overrides and environment-level settings overrides"""
    job_overrides = {
        'degree': args.degree,
        'tolerance': args.tol,
        'mode': args.mode,
        'dense': args.dense or None,
    }
    settings_overrides = {
        'log_level': args.log_level,
        'report_timing': True if args.timing else None,
    }
    return {'job': job_overrides, 'settings': settings_overrides}


def check_dependencies(stream=None) -> bool:
    """Check if required dependencies are installed"""
    stream = stream or sys.stderr
    missing_deps = []
    for package in REQUIRED_PACKAGES:
        try:
            importlib.import_module(package)
        except ImportError:
            missing_deps.append(package)

    if missing_deps:
        stream.write("rkhsmult: error: missing required dependencies: " + ', '.join(missing_deps) + "\n")
        stream.write("Install them with: pip install -r requirements.txt\n")
        return False
    return True


def main(argv: Optional[List[str]] = None) -> int:
    """Main launcher function"""
    try:
        args = parse_arguments(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help / --version
        return int(exc.code or 0)

    if not check_dependencies():
        return 2

    from .main import RkhsMultApplication

    overrides = apply_arguments(args)
    app = RkhsMultApplication()
    return app.run(args.config, args.subcommand, overrides['job'], out=args.out, csv_path=args.csv,
                   settings_overrides=overrides['settings'])


if __name__ == "__main__":
    sys.exit(main())
