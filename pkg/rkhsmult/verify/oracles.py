#!/usr/bin/env python3
"""
Brute-force multiplicativity oracles

A functional is multiplicative on polynomials of degree <= D iff
Lambda(z^(alpha+beta)) = Lambda(z^alpha) Lambda(z^beta) for every
|alpha + beta| <= D, pairs with alpha = 0 included. Pairs are scanned by
increasing total degree so the first witness has minimal degree.
"""

from ..errors import DegreeOutOfRange
from ..functionals.functional import Functional, TensorFunctional
from ..series.multi_index import MultiIndex, multi_indices_up_to, splittings
from ..series.scalars import monomial
from ..utils.logger import get_logger
from .reports import BruteForceReport

logger = get_logger(__name__)

FLOAT_TOLERANCE = 1e-12


def _matcher(exact: bool, tolerance: float):
    if exact:
        return lambda a, b: a == b
    return lambda a, b: abs(complex(a) - complex(b)) <= tolerance


def brute_force_multiplicative(functional: Functional, max_degree: int,
                               tolerance: float = FLOAT_TOLERANCE) -> BruteForceReport:
    """Check monomial multiplicativity up to max_degree; exact in rational mode"""
    if 2 * max_degree > functional.degree:
        raise DegreeOutOfRange(f"Brute force to degree {max_degree} needs functional degree "
                               f">= {2 * max_degree}, got {functional.degree}")
    values = functional.values
    same = _matcher(functional.is_exact, tolerance)

    checked = 0
    witness = None
    witness_values = None
    for gamma in multi_indices_up_to(functional.dimension, max_degree):
        for alpha, beta in splittings(gamma):
            checked += 1
            product = values[alpha] * values[beta]
            if not same(values[gamma], product):
                witness, witness_values = (alpha, beta), (product, values[gamma])
                break
        if witness is not None:
            break

    firsts = [values[MultiIndex.unit(functional.dimension, i)] if max_degree >= 1 else 0
              for i in range(functional.dimension)]
    power_form = all(same(values[alpha], monomial(firsts, alpha.exponents))
                     for alpha in multi_indices_up_to(functional.dimension, max_degree))

    report = BruteForceReport(
        functional=functional.label,
        max_degree=max_degree,
        mode=functional.mode,
        checked_pairs=checked,
        witness=witness,
        witness_values=witness_values,
        power_form_holds=power_form,
    )
    logger.info("Brute force multiplicativity checked", functional=functional.label,
                max_degree=max_degree, passed=report.passed, witness_degree=report.witness_degree)
    return report


def brute_force_multiplicative_tensor(functional: TensorFunctional, max_degree: int,
                                      tolerance: float = FLOAT_TOLERANCE) -> BruteForceReport:
    """Brute force on the flattened functional in 2d variables (x, s)"""
    return brute_force_multiplicative(functional.flatten(), max_degree, tolerance)
