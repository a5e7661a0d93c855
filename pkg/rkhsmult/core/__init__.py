#!/usr/bin/env python3
"""
Core Module for rkhsmult
"""

from .app_core import RkhsMultCore

__all__ = ['RkhsMultCore']
