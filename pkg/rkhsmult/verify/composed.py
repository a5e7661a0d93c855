#!/usr/bin/env python3
"""
Composed kernel 1/(1 - b(z) conj(b(w))) for a self-map b of the ball into the disc

In the variable u = b(z) this is the Szego kernel, and the limit of point
evaluations along a sequence with b(z_j) -> lam acts as Lambda(u^n) = lam^n.
Only lam = 0 is computable: the functional is then evaluation at the origin in
u, of norm 1 with Lambda(1) = 1. For lam != 0 its norm is (1 - |lam|^2)^(-1/2)
and the norm-1 hypothesis fails, so that case is reported as unresolved.
"""

from typing import Sequence

from ..errors import UnresolvedCase
from ..functionals.functional import point_evaluation
from ..kernels.kernel import szego
from ..series.scalars import normalize
from ..utils.logger import get_logger
from .criteria import check_power_criterion
from .reports import CriterionReport

logger = get_logger(__name__)


def check_composed_limit(lam, symbol_values: Sequence, degree: int = 24, p: int = 1,
                         tolerance: float = 1e-9) -> CriterionReport:
    """Power criterion for the limit functional at every supplied value b(w)"""
    if normalize(lam) != 0:
        raise UnresolvedCase(f"Composed-kernel limit functional at lam = {lam} has norm > 1; "
                             "only lam = 0 is handled")
    kernel = szego(1, degree)
    functional = point_evaluation(kernel, [lam])
    report = check_power_criterion(functional, kernel, p, [[u] for u in symbol_values], tolerance)
    report.functional = 'composed_limit(0)'
    logger.info("Composed limit checked", symbols=len(symbol_values), verdict=report.verdict)
    return report
