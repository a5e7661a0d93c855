#!/usr/bin/env python3
"""
Shared fixtures for the rkhsmult tests
"""

import json
from pathlib import Path

import pytest

from rkhsmult.utils.config import load_config

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = Path(__file__).resolve().parent / 'data'
GOLDEN_DIR = Path(__file__).resolve().parent / 'golden'


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch):
    """No log files and default settings regardless of the caller's environment"""
    for name in ('RKHSMULT_DEGREE', 'RKHSMULT_TOL', 'RKHSMULT_MODE', 'RKHSMULT_RHO_MAX',
                 'RKHSMULT_DIVERGENCE_RATIO', 'RKHSMULT_REPORT_TIMING', 'RKHSMULT_LOG_FORMAT'):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv('RKHSMULT_LOG_DIR', '')
    monkeypatch.setenv('RKHSMULT_LOG_LEVEL', 'ERROR')


@pytest.fixture
def settings():
    return load_config()


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def write_job(tmp_path):
    """Write a job dict to a temporary JSON file and return its path"""
    def _write(job: dict, name: str = 'job.json') -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(job), encoding='utf-8')
        return path

    return _write
