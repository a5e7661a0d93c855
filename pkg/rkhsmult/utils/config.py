#!/usr/bin/env python3
"""
Configuration Module for rkhsmult

Settings are layered: built-in defaults, then RKHSMULT_* environment
variables, then explicit overrides (command-line flags).
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional

from ..errors import ConfigError

MODES = ('exact', 'float')


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ('1', 'true', 'yes', 'on')


def load_config(overrides: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Load runtime configuration"""
    try:
        config = {
            # Truncation and verification settings
            'degree': int(os.getenv('RKHSMULT_DEGREE', '24')),
            'tolerance': float(os.getenv('RKHSMULT_TOL', '1e-9')),
            'mode': os.getenv('RKHSMULT_MODE', 'exact').strip().lower(),
            'rho_max': float(os.getenv('RKHSMULT_RHO_MAX', '0.95')),
            'divergence_ratio': float(os.getenv('RKHSMULT_DIVERGENCE_RATIO', '1.5')),

            # Report settings
            'report_timing': _env_bool('RKHSMULT_REPORT_TIMING', 'false'),

            # Logging settings
            'log_level': os.getenv('RKHSMULT_LOG_LEVEL', 'WARNING').upper(),
            'log_format': os.getenv('RKHSMULT_LOG_FORMAT', 'console').lower(),
            'log_dir': os.getenv('RKHSMULT_LOG_DIR', str(Path.home() / '.rkhsmult' / 'logs')),
        }
    except ValueError as e:
        raise ConfigError(f"Invalid RKHSMULT_* environment value: {e}") from e

    for key, value in (overrides or {}).items():
        if value is not None:
            config[key] = value

    if config['mode'] not in MODES:
        raise ConfigError(f"Unsupported arithmetic mode: {config['mode']}")
    if config['degree'] < 1:
        raise ConfigError(f"Truncation degree must be positive, got {config['degree']}")
    if not 0 < config['rho_max'] < 1:
        raise ConfigError(f"rho_max must lie in (0, 1), got {config['rho_max']}")

    return config


def get_log_config(config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Get logging configuration for logging.config.dictConfig"""
    import structlog

    config = config or load_config()
    renderer = (structlog.processors.JSONRenderer() if config['log_format'] == 'json'
                else structlog.dev.ConsoleRenderer(colors=False))
    foreign_pre_chain = [
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt='iso'),
    ]

    handlers: Dict[str, Any] = {
        'console': {
            'class': 'logging.StreamHandler',
            'level': config['log_level'],
            'formatter': 'standard',
            'stream': 'ext://sys.stderr'
        }
    }
    if config['log_dir']:
        handlers['file'] = {
            'class': 'logging.FileHandler',
            'level': 'DEBUG',
            'formatter': 'detailed',
            'filename': str(Path(config['log_dir']) / 'rkhsmult.log'),
            'mode': 'a'
        }

    return {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'standard': {
                '()': structlog.stdlib.ProcessorFormatter,
                'processor': renderer,
                'foreign_pre_chain': foreign_pre_chain,
            },
            'detailed': {
                '()': structlog.stdlib.ProcessorFormatter,
                'processor': structlog.processors.JSONRenderer(sort_keys=True),
                'foreign_pre_chain': foreign_pre_chain,
            }
        },
        'handlers': handlers,
        'loggers': {
            'rkhsmult': {
                'level': 'DEBUG',
                'handlers': list(handlers),
                'propagate': False
            }
        },
        'root': {
            'level': config['log_level'],
            'handlers': ['console']
        }
    }
