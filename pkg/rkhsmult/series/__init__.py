#!/usr/bin/env python3
"""
Series Module for rkhsmult

Exact rational power series in t = <z, w> plus multi-index combinatorics.
"""

from .scalars import GaussianRational, is_exact, abs_sq, conj, monomial, norm_sq
from .multi_index import (
    MultiIndex, Composition, multinomial, compositions, all_compositions,
    multi_indices_of_degree, multi_indices_up_to, splittings,
)
from .core import (
    RationalSeries, series_add, series_sub, series_mul, series_reciprocal,
    series_pow, tail_estimate, max_ratio,
)

__all__ = [
    'GaussianRational', 'is_exact', 'abs_sq', 'conj', 'monomial', 'norm_sq',
    'MultiIndex', 'Composition', 'multinomial', 'compositions', 'all_compositions',
    'multi_indices_of_degree', 'multi_indices_up_to', 'splittings',
    'RationalSeries', 'series_add', 'series_sub', 'series_mul', 'series_reciprocal',
    'series_pow', 'tail_estimate', 'max_ratio',
]
