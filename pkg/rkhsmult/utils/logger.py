#!/usr/bin/env python3
"""
Logger Setup for rkhsmult

Library code logs through structlog bound loggers that are routed into the
standard logging tree under 'rkhsmult'. Nothing is emitted until the host
application (or the CLI) calls setup_logging.
"""

import logging
import logging.config
from pathlib import Path
from typing import Any, Dict, Optional

import structlog

from .config import get_log_config, load_config

_structlog_configured = False


def configure_structlog() -> None:
    """Route structlog through stdlib logging (idempotent)"""
    global _structlog_configured
    if _structlog_configured:
        return
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt='iso'),
            structlog.processors.format_exc_info,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
    _structlog_configured = True


def setup_logging(config: Optional[Dict[str, Any]] = None) -> None:
    """Setup application logging with proper configuration"""
    config = config or load_config()
    configure_structlog()

    if config['log_dir']:
        Path(config['log_dir']).mkdir(parents=True, exist_ok=True)

    log_config = get_log_config(config)
    try:
        logging.config.dictConfig(log_config)
    except (ValueError, OSError) as e:
        # Fallback: console only
        logging.basicConfig(level=config['log_level'],
                            format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        get_logger('logger').warning("Failed to apply logging dict config", error=str(e))
        return

    get_logger('logger').debug("rkhsmult logging initialized",
                               level=config['log_level'], log_dir=config['log_dir'])


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a logger instance for a specific module"""
    configure_structlog()
    if name.startswith('rkhsmult.'):
        name = name[len('rkhsmult.'):]
    return structlog.get_logger(f'rkhsmult.{name}')
