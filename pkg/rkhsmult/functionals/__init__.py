#!/usr/bin/env python3
"""
Functionals Module for rkhsmult

Functionals represented by their monomial values and their action on kernels.
"""

from .functional import (
    Functional, TensorFunctional, EXACT, FLOAT, point_functional, point_evaluation, counterexample_functional,
    boundary_limit_ones, boundary_limit, tensor_point, tensor_functional,
)
from .action import (
    functional_norm_sq_truncated, apply_to_kernel_function, apply_to_inverse_kernel,
    apply_to_kernel_power, apply_series_route, inner_b_sum, tensor_norm_sq_truncated,
    apply_to_tensor_kernel, apply_to_inverse_kernels_tensor,
)

__all__ = [
    'Functional', 'TensorFunctional', 'EXACT', 'FLOAT', 'point_functional', 'point_evaluation',
    'counterexample_functional', 'boundary_limit_ones', 'boundary_limit',
    'tensor_point', 'tensor_functional',
    'functional_norm_sq_truncated', 'apply_to_kernel_function', 'apply_to_inverse_kernel',
    'apply_to_kernel_power', 'apply_series_route', 'inner_b_sum', 'tensor_norm_sq_truncated',
    'apply_to_tensor_kernel', 'apply_to_inverse_kernels_tensor',
]
