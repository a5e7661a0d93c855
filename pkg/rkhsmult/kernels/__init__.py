#!/usr/bin/env python3
"""
Kernels Module for rkhsmult

Unitarily invariant kernels, their CNP transform and the truncated RKHS model.
"""

from .kernel import (
    Kernel, TensorKernel, KernelValue, szego, drury_arveson, dirichlet, bergman,
    from_coeffs, kernel_power, schur_product, tensor_kernel, a_alpha, kernel_eval,
)
from .cnp import CnpData, cnp_transform, reconstruct_kernel_series, b_alpha, inverse_kernel_coeffs, require_cnp
from .rkhs import MembershipReport, rkhs_norm_sq, inverse_power_membership_check

__all__ = [
    'Kernel', 'TensorKernel', 'KernelValue', 'szego', 'drury_arveson', 'dirichlet',
    'bergman', 'from_coeffs', 'kernel_power', 'schur_product', 'tensor_kernel',
    'a_alpha', 'kernel_eval',
    'CnpData', 'cnp_transform', 'reconstruct_kernel_series', 'b_alpha',
    'inverse_kernel_coeffs', 'require_cnp',
    'MembershipReport', 'rkhs_norm_sq', 'inverse_power_membership_check',
]
