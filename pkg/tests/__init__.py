#!/usr/bin/env python3
"""
rkhsmult Tests

Test suite for the rkhsmult package
"""
