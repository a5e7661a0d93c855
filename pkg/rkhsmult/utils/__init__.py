#!/usr/bin/env python3
"""
Utility Modules for rkhsmult
"""

from .config import load_config, get_log_config
from .logger import setup_logging, get_logger

__all__ = ['load_config', 'get_log_config', 'setup_logging', 'get_logger']
