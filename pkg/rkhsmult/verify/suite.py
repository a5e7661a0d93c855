#!/usr/bin/env python3
"""
Equivalence suite: the three characterizations of multiplicativity side by side
"""

from typing import Sequence

from ..functionals.functional import Functional
from ..kernels.kernel import Kernel
from ..utils.logger import get_logger
from .criteria import check_power_criterion
from .identities import identity_sweep
from .oracles import brute_force_multiplicative
from .reports import FAIL, EquivalenceReport

logger = get_logger(__name__)


def equivalence_suite(functional: Functional, k: Kernel, p: int, max_degree: int,
                      samples: Sequence, tolerance: float = 1e-9) -> EquivalenceReport:
    """Run brute force, the identity sweep and the power criterion and compare verdicts"""
    brute_force = brute_force_multiplicative(functional, max_degree)
    identities = identity_sweep(functional, k, p, max_degree)
    criterion = check_power_criterion(functional, k, p, samples, tolerance)

    caveats = []
    flags = criterion.hypothesis_flags
    if not flags.norm_ok:
        caveats.append(f"truncated norm^2 {float(flags.norm_sq):.6g} exceeds 1 + tol: "
                       "the criterion does not imply multiplicativity for this functional")
    if not flags.unit_ok:
        caveats.append("Lambda(1) != 1")
    if brute_force.passed and criterion.verdict == FAIL:
        caveats.append("multiplicative functional failed the sampled criterion; check the truncation degree")

    report = EquivalenceReport(brute_force, identities, criterion, caveats)
    logger.info("Equivalence suite completed", functional=functional.label, kernel=k.label, p=p,
                verdict=report.verdict, agree=report.agree)
    return report
