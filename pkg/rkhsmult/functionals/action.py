#!/usr/bin/env python3
"""
Action of functionals on kernel functions

Every quantity is a finite sum over |alpha| <= min(Lambda.degree, k.degree).
Exact inputs (functional values and point) give exact results.
"""

from fractions import Fraction
from typing import Sequence

from ..errors import DimensionMismatch, SeriesBoundViolated
from ..kernels.cnp import b_alpha, check_in_ball, require_cnp
from ..kernels.kernel import Kernel, TensorKernel, a_alpha, kernel_power
from ..series.core import binomial_series_coefficient
from ..series.scalars import abs_sq, conj, monomial, normalize
from ..utils.logger import get_logger
from .functional import Functional, TensorFunctional

logger = get_logger(__name__)


def _common_degree(lam: Functional, k: Kernel) -> int:
    if lam.dimension != k.dimension:
        raise DimensionMismatch(f"Functional {lam.label} on B_{lam.dimension}, kernel {k.label} on B_{k.dimension}")
    return min(lam.degree, k.degree)


def functional_norm_sq_truncated(lam: Functional, k: Kernel, upto: int = None):
    """
    sum_{|alpha|<=N} a_alpha |Lambda(z^alpha)|^2, the squared norm of the
    truncated Riesz representer g_alpha = a_alpha conj(Lambda(z^alpha)).

    Non-decreasing in N and a lower bound of ||Lambda||^2.
    """
    degree = _common_degree(lam, k)
    if upto is not None:
        degree = min(degree, upto)
    total = Fraction(0)
    for alpha, value in lam.items(degree):
        total = total + a_alpha(k, alpha) * abs_sq(value)
    return total


def apply_to_kernel_function(lam: Functional, k: Kernel, w: Sequence):
    """Lambda(k_w) = sum a_alpha Lambda(z^alpha) conj(w)^alpha"""
    degree = _common_degree(lam, k)
    check_in_ball(w, k.dimension)
    w_bar = [conj(x) for x in w]
    total = Fraction(0)
    for alpha, value in lam.items(degree):
        if value:
            total = total + a_alpha(k, alpha) * value * monomial(w_bar, alpha.exponents)
    return normalize(total)


def inner_b_sum(lam: Functional, k: Kernel, w: Sequence):
    """Lambda(<b(z), b(w)>) = sum_{alpha != 0} b_alpha Lambda(z^alpha) conj(w)^alpha"""
    degree = _common_degree(lam, k)
    check_in_ball(w, k.dimension)
    require_cnp(k)
    w_bar = [conj(x) for x in w]
    total = Fraction(0)
    for alpha, value in lam.items(degree):
        if alpha.is_zero or not value:
            continue
        total = total + b_alpha(k, alpha) * value * monomial(w_bar, alpha.exponents)
    return normalize(total)


def apply_to_inverse_kernel(lam: Functional, k: Kernel, w: Sequence):
    """Lambda(1/k_w) = Lambda(1) - Lambda(<b(z), b(w)>)"""
    return normalize(lam.unit_value - inner_b_sum(lam, k, w))


def apply_to_kernel_power(lam: Functional, k: Kernel, p: int, w: Sequence):
    """Lambda(k_w^p) through the coefficients of k^p"""
    return apply_to_kernel_function(lam, kernel_power(k, p), w)


def apply_series_route(lam: Functional, k: Kernel, p: int, w: Sequence):
    """
    Lambda(k_w^p) as sum_{n<=N} binom(n+p-1, p-1) s^n with s = Lambda(<b(z), b(w)>)

    Agrees with apply_to_kernel_power when Lambda is multiplicative; for other
    functionals the two routes differ, which is what the criteria detect.
    """
    s = inner_b_sum(lam, k, w)
    if abs(complex(s)) >= 1:
        raise SeriesBoundViolated(f"|Lambda(<b(z), b(w)>)| = {abs(complex(s)):.6g} >= 1")
    degree = _common_degree(lam, k)
    total = Fraction(0)
    term = Fraction(1)
    for n in range(degree + 1):
        total = total + binomial_series_coefficient(n, p) * term
        term = term * s
    return normalize(total)


# Tensor products -------------------------------------------------------------

def _tensor_degree(lam: TensorFunctional, tk: TensorKernel) -> int:
    if lam.dimension != tk.dimension:
        raise DimensionMismatch(f"Tensor functional on B_{lam.dimension}^2, kernel on B_{tk.dimension}^2")
    return min(lam.degree, tk.degree)


def tensor_norm_sq_truncated(lam: TensorFunctional, tk: TensorKernel):
    """sum a1_alpha a2_beta |Lambda(x^alpha s^beta)|^2 over |alpha|+|beta| <= N"""
    degree = _tensor_degree(lam, tk)
    total = Fraction(0)
    for (alpha, beta), value in lam.values.items():
        if alpha.degree + beta.degree <= degree:
            total = total + tk.coefficient(alpha, beta) * abs_sq(value)
    return total


def apply_to_tensor_kernel(lam: TensorFunctional, tk: TensorKernel, y: Sequence, t: Sequence):
    """Lambda(k1_y (x) k2_t) = sum a1_alpha a2_beta Lambda(x^alpha s^beta) conj(y)^alpha conj(t)^beta"""
    degree = _tensor_degree(lam, tk)
    check_in_ball(y, tk.dimension)
    check_in_ball(t, tk.dimension)
    y_bar = [conj(x) for x in y]
    t_bar = [conj(x) for x in t]
    total = Fraction(0)
    for (alpha, beta), value in lam.values.items():
        if alpha.degree + beta.degree > degree or not value:
            continue
        total = total + (tk.coefficient(alpha, beta) * value
                         * monomial(y_bar, alpha.exponents) * monomial(t_bar, beta.exponents))
    return normalize(total)


def apply_to_inverse_kernels_tensor(lam: TensorFunctional, tk: TensorKernel, y: Sequence, t: Sequence):
    """(Lambda(1/k1_y), Lambda(1/k2_t)); each inverse depends on one block of variables"""
    _tensor_degree(lam, tk)
    left = apply_to_inverse_kernel(lam.left_marginal(), tk.left, y)
    right = apply_to_inverse_kernel(lam.right_marginal(), tk.right, t)
    return left, right
