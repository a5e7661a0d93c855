#!/usr/bin/env python3
"""
Command line support for rkhsmult: expression parsing, job files and reports
"""

from .expressions import parse_kernel_expr, parse_functional_expr, parse_value, parse_point, load_table
from .job import CheckSpec, JobConfig, PreparedJob, load_job, prepare_job
from .report import ReportDocument, ReportEntry

__all__ = [
    'parse_kernel_expr', 'parse_functional_expr', 'parse_value', 'parse_point', 'load_table',
    'CheckSpec', 'JobConfig', 'PreparedJob', 'load_job', 'prepare_job',
    'ReportDocument', 'ReportEntry',
]
