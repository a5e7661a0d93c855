#!/usr/bin/env python3
"""
Verify Module for rkhsmult

Criteria, brute-force oracles, exact coefficient identities and their reports.
"""

from .reports import (
    PASS, FAIL, INCONCLUSIVE, NOT_APPLICABLE, HypothesisFlags, SampleResidual,
    CriterionReport, IdentityReport, IdentitySweepReport, BruteForceReport, EquivalenceReport,
)
from .samples import default_samples, dense_samples, tensor_pairs
from .criteria import (
    CriterionManager, check_power_criterion, check_schur_criterion, check_tensor_criterion,
    tensor_criterion_witness_degree,
)
from .oracles import brute_force_multiplicative, brute_force_multiplicative_tensor
from .identities import (
    coefficient_identity_check, coefficient_identity_check_schur, coefficient_identity_check_tensor,
    identity_sweep, schur_identity_sweep, tensor_identity_sweep,
)
from .suite import equivalence_suite
from .composed import check_composed_limit

__all__ = [
    'PASS', 'FAIL', 'INCONCLUSIVE', 'NOT_APPLICABLE', 'HypothesisFlags', 'SampleResidual',
    'CriterionReport', 'IdentityReport', 'IdentitySweepReport', 'BruteForceReport', 'EquivalenceReport',
    'default_samples', 'dense_samples', 'tensor_pairs',
    'CriterionManager', 'check_power_criterion', 'check_schur_criterion', 'check_tensor_criterion',
    'tensor_criterion_witness_degree',
    'brute_force_multiplicative', 'brute_force_multiplicative_tensor',
    'coefficient_identity_check', 'coefficient_identity_check_schur', 'coefficient_identity_check_tensor',
    'identity_sweep', 'schur_identity_sweep', 'tensor_identity_sweep',
    'equivalence_suite', 'check_composed_limit',
]
