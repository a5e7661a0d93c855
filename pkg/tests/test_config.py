#!/usr/bin/env python3
"""
Tests for settings and logging configuration
"""

import logging

import pytest
import structlog

from rkhsmult.errors import ConfigError
from rkhsmult.utils.config import get_log_config, load_config
from rkhsmult.utils.logger import get_logger, setup_logging


class TestLoadConfig:
    """Defaults, environment and overrides"""

    def test_defaults(self):
        config = load_config()
        assert config['degree'] == 24
        assert config['tolerance'] == 1e-9
        assert config['mode'] == 'exact'
        assert config['rho_max'] == 0.95
        assert config['divergence_ratio'] == 1.5
        assert config['report_timing'] is False
        assert config['log_level'] == 'ERROR'
        assert config['log_dir'] == ''

    def test_environment(self, monkeypatch):
        monkeypatch.setenv('RKHSMULT_DEGREE', '12')
        monkeypatch.setenv('RKHSMULT_MODE', 'Float')
        monkeypatch.setenv('RKHSMULT_REPORT_TIMING', 'yes')
        config = load_config()
        assert config['degree'] == 12
        assert config['mode'] == 'float'
        assert config['report_timing'] is True

    def test_overrides_skip_none(self, monkeypatch):
        monkeypatch.setenv('RKHSMULT_DEGREE', '12')
        config = load_config({'degree': 7, 'mode': None})
        assert config['degree'] == 7
        assert config['mode'] == 'exact'

    @pytest.mark.parametrize('name, value', [
        ('RKHSMULT_DEGREE', 'twelve'),
        ('RKHSMULT_DEGREE', '0'),
        ('RKHSMULT_MODE', 'symbolic'),
        ('RKHSMULT_RHO_MAX', '1.5'),
        ('RKHSMULT_TOL', 'small'),
    ])
    def test_invalid_environment(self, monkeypatch, name, value):
        monkeypatch.setenv(name, value)
        with pytest.raises(ConfigError):
            load_config()


class TestLogging:
    """dictConfig built from the settings"""

    def test_console_only_without_log_dir(self):
        log_config = get_log_config(load_config())
        assert list(log_config['handlers']) == ['console']
        assert log_config['handlers']['console']['level'] == 'ERROR'
        assert log_config['loggers']['rkhsmult']['propagate'] is False

    def test_file_handler_with_log_dir(self, tmp_path):
        log_config = get_log_config(load_config({'log_dir': str(tmp_path)}))
        assert log_config['handlers']['file']['filename'] == str(tmp_path / 'rkhsmult.log')
        assert log_config['loggers']['rkhsmult']['handlers'] == ['console', 'file']

    def test_json_renderer(self):
        log_config = get_log_config(load_config({'log_format': 'json'}))
        assert isinstance(log_config['formatters']['standard']['processor'], structlog.processors.JSONRenderer)

    def test_setup_writes_log_file(self, tmp_path):
        log_dir = tmp_path / 'logs'
        setup_logging(load_config({'log_dir': str(log_dir)}))
        get_logger('tests').info("Logging configured", sample=1)
        for handler in logging.getLogger('rkhsmult').handlers:
            handler.flush()
        contents = (log_dir / 'rkhsmult.log').read_text(encoding='utf-8')
        assert 'Logging configured' in contents
        setup_logging(load_config())

    def test_logger_names(self):
        assert get_logger('rkhsmult.kernels.cnp') is not None
