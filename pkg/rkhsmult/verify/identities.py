#!/usr/bin/env python3
"""
Exact coefficient identities behind the criteria

Expanding both sides of a criterion as power series in conj(w) and comparing
the coefficient of conj(w)^alpha turns it into a finite identity over
compositions of alpha. For the power criterion:

    sum_r binom(r+p-1, p-1) sum_{gamma_1+...+gamma_r = alpha} prod_i b_gamma_i Lambda(z^gamma_i)
  = sum_r binom(r+p-1, p-1) sum_{gamma_1+...+gamma_r = alpha} prod_i b_gamma_i * Lambda(z^alpha)

The left side is the series route, the right side is Lambda applied to k_w^p
directly. At alpha = 0 the two sides are 1 and Lambda(1). With b_1 > 0 the
identity holding for all |alpha| <= D is equivalent to multiplicativity up
to degree D.
"""

from fractions import Fraction
from functools import reduce
from operator import mul
from typing import Callable, Dict, List

from ..errors import DegreeOutOfRange, DimensionMismatch, NonRationalValues
from ..functionals.functional import Functional, TensorFunctional
from ..kernels.cnp import b_alpha, require_cnp
from ..kernels.kernel import Kernel
from ..series.core import binomial_series_coefficient
from ..series.multi_index import MultiIndex, composition_parts, multi_indices_up_to, splittings
from ..series.scalars import normalize
from ..utils.logger import get_logger
from .reports import IdentityReport, IdentitySweepReport

logger = get_logger(__name__)


def _require_exact(functional) -> None:
    if functional.mode != 'exact':
        raise NonRationalValues(f"Functional {functional.label} has floating point values; "
                                "coefficient identities run in exact mode only")


def _check_degree(alpha: MultiIndex, functional: Functional, k: Kernel) -> None:
    if alpha.dimension != k.dimension or functional.dimension != k.dimension:
        raise DimensionMismatch(f"{alpha}, functional {functional.label} and kernel {k.label} disagree on dimension")
    limit = min(functional.degree, k.degree)
    if alpha.degree > limit:
        raise DegreeOutOfRange(f"|{alpha}| = {alpha.degree} exceeds truncation degree {limit}")


def _composition_sum(alpha: MultiIndex, weight: Callable[[MultiIndex], object],
                     coefficient: Callable[[int], int] = lambda r: 1):
    """sum_r coefficient(r) sum_{compositions into r parts} prod weight(part)"""
    total = Fraction(0)
    for r in range(1, alpha.degree + 1):
        inner = Fraction(0)
        for parts in composition_parts(alpha, r):
            inner = inner + reduce(mul, (weight(gamma) for gamma in parts), Fraction(1))
        total = total + coefficient(r) * inner
    return total


def _b_weights(functional: Functional, k: Kernel) -> Dict[MultiIndex, object]:
    """gamma -> b_gamma Lambda(z^gamma) up to the common truncation"""
    limit = min(functional.degree, k.degree)
    return {gamma: b_alpha(k, gamma) * value
            for gamma, value in functional.items(limit) if not gamma.is_zero}


def _series_route_coefficient(alpha: MultiIndex, weights: Dict[MultiIndex, object]) -> object:
    """Coefficient of conj(w)^alpha in sum_n s^n, s = Lambda(<b(z), b(w)>); 1 at alpha = 0"""
    if alpha.is_zero:
        return Fraction(1)
    return _composition_sum(alpha, weights.__getitem__)


def coefficient_identity_check(functional: Functional, k: Kernel, p: int, alpha: MultiIndex) -> IdentityReport:
    """Compare the conj(w)^alpha coefficients of both routes to Lambda(k_w^p)"""
    _require_exact(functional)
    require_cnp(k)
    _check_degree(alpha, functional, k)
    if alpha.is_zero:
        return IdentityReport('power', p, alpha, Fraction(1), functional.unit_value)

    weights = _b_weights(functional, k)
    binomial = lambda r: binomial_series_coefficient(r, p)
    lhs = _composition_sum(alpha, weights.__getitem__, binomial)
    rhs = _composition_sum(alpha, lambda gamma: b_alpha(k, gamma), binomial) * functional.values[alpha]
    return IdentityReport('power', p, alpha, normalize(lhs), normalize(rhs))


def coefficient_identity_check_schur(functional: Functional, k1: Kernel, k2: Kernel,
                                     alpha: MultiIndex) -> IdentityReport:
    """
    Schur-product variant: sum over splittings delta_1 + delta_2 = alpha of
    P1(delta_1) P2(delta_2) against Q1(delta_1) Q2(delta_2) Lambda(z^alpha),
    where P uses b Lambda weights and Q uses bare b weights.
    """
    _require_exact(functional)
    require_cnp(k1)
    require_cnp(k2)
    _check_degree(alpha, functional, k1)
    _check_degree(alpha, functional, k2)

    weights_1, weights_2 = _b_weights(functional, k1), _b_weights(functional, k2)
    lhs = Fraction(0)
    rhs = Fraction(0)
    for delta_1, delta_2 in splittings(alpha):
        p1 = _series_route_coefficient(delta_1, weights_1)
        p2 = _series_route_coefficient(delta_2, weights_2)
        q1 = Fraction(1) if delta_1.is_zero else _composition_sum(delta_1, lambda g: b_alpha(k1, g))
        q2 = Fraction(1) if delta_2.is_zero else _composition_sum(delta_2, lambda g: b_alpha(k2, g))
        lhs = lhs + p1 * p2
        rhs = rhs + q1 * q2
    rhs = rhs * functional.values[alpha]
    return IdentityReport('schur', None, alpha, normalize(lhs), normalize(rhs))


def coefficient_identity_check_tensor(functional: TensorFunctional, k1: Kernel, k2: Kernel,
                                      alpha: MultiIndex, beta: MultiIndex) -> IdentityReport:
    """
    Tensor variant: coefficient of conj(y)^alpha conj(t)^beta, comparing
    P1(alpha) P2(beta) from the marginals against a1_alpha a2_beta Lambda(x^alpha s^beta).
    """
    _require_exact(functional)
    require_cnp(k1)
    require_cnp(k2)
    left, right = functional.left_marginal(), functional.right_marginal()
    _check_degree(alpha, left, k1)
    _check_degree(beta, right, k2)
    if alpha.degree + beta.degree > functional.degree:
        raise DegreeOutOfRange(f"|{alpha}| + |{beta}| exceeds functional degree {functional.degree}")

    lhs = (_series_route_coefficient(alpha, _b_weights(left, k1))
           * _series_route_coefficient(beta, _b_weights(right, k2)))
    q1 = Fraction(1) if alpha.is_zero else _composition_sum(alpha, lambda g: b_alpha(k1, g))
    q2 = Fraction(1) if beta.is_zero else _composition_sum(beta, lambda g: b_alpha(k2, g))
    rhs = q1 * q2 * functional.value(alpha, beta)
    return IdentityReport('tensor', None, alpha, normalize(lhs), normalize(rhs), beta=beta)


def identity_sweep(functional: Functional, k: Kernel, p: int, max_degree: int) -> IdentitySweepReport:
    """coefficient_identity_check for every |alpha| <= max_degree, graded order"""
    reports: List[IdentityReport] = [
        coefficient_identity_check(functional, k, p, alpha)
        for alpha in multi_indices_up_to(k.dimension, max_degree)
    ]
    sweep = IdentitySweepReport('power', functional.label, [k.label], p, max_degree, reports)
    logger.info("Identity sweep completed", functional=functional.label, kernel=k.label, p=p,
                max_degree=max_degree, first_failing_degree=sweep.first_failing_degree)
    return sweep


def schur_identity_sweep(functional: Functional, k1: Kernel, k2: Kernel, max_degree: int) -> IdentitySweepReport:
    reports = [coefficient_identity_check_schur(functional, k1, k2, alpha)
               for alpha in multi_indices_up_to(k1.dimension, max_degree)]
    return IdentitySweepReport('schur', functional.label, [k1.label, k2.label], None, max_degree, reports)


def tensor_identity_sweep(functional: TensorFunctional, k1: Kernel, k2: Kernel,
                          max_degree: int) -> IdentitySweepReport:
    """Every (alpha, beta) with |alpha| + |beta| <= max_degree"""
    reports = []
    for joint in multi_indices_up_to(2 * functional.dimension, max_degree):
        alpha, beta = joint.split(functional.dimension)
        reports.append(coefficient_identity_check_tensor(functional, k1, k2, alpha, beta))
    return IdentitySweepReport('tensor', functional.label, [k1.label, k2.label], None, max_degree, reports)
