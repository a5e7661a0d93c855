#!/usr/bin/env python3
"""
Truncated RKHS coefficient model

Monomials are orthogonal in H(k) with ||z^alpha||^2 = 1/a_alpha, so for
f = sum f_alpha z^alpha the truncated sum over |alpha| <= N is a lower
bound of ||f||^2 that is non-decreasing in N.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence

from ..errors import ValidationError
from ..series.core import series_pow, series_reciprocal
from ..series.multi_index import MultiIndex, multi_indices_up_to, multinomial
from ..series.scalars import abs_sq, conj, monomial, normalize
from ..utils.logger import get_logger
from .cnp import check_in_ball
from .kernel import Kernel, a_alpha, kernel_power

logger = get_logger(__name__)


def rkhs_norm_sq(k: Kernel, f: Mapping[MultiIndex, object], upto: Optional[int] = None):
    """
    Lower bound sum_{|alpha|<=N} |f_alpha|^2 / a_alpha of ||f||^2 in H(k)

    Coefficients beyond the truncation (or beyond upto) are ignored; missing
    coefficients count as zero. Exact inputs give a Fraction.
    """
    limit = k.degree if upto is None else min(upto, k.degree)
    total = Fraction(0)
    for alpha, value in f.items():
        if alpha.degree > limit:
            continue
        total = total + abs_sq(value) / a_alpha(k, alpha)
    return total


def _number(value) -> str:
    return str(value) if isinstance(value, Fraction) else repr(float(value))


@dataclass
class MembershipReport:
    """Truncated norm of k_w^{-m} in H(k^p) at two truncation degrees"""
    kernel: str
    p: int
    m: int
    point: Sequence
    degree_half: int
    degree_full: int
    norm_sq_half: object
    norm_sq_full: object
    growth_ratio: float
    threshold: float
    diverging: bool

    @property
    def change(self) -> float:
        return abs(float(self.norm_sq_full) - float(self.norm_sq_half))

    def to_dict(self) -> Dict:
        return {
            'kernel': self.kernel,
            'p': self.p,
            'm': self.m,
            'point': [str(x) for x in self.point],
            'degree_half': self.degree_half,
            'degree_full': self.degree_full,
            'norm_sq_half': _number(self.norm_sq_half),
            'norm_sq_full': _number(self.norm_sq_full),
            'growth_ratio': self.growth_ratio,
            'threshold': self.threshold,
            'diverging': self.diverging,
        }


def inverse_power_coeffs(k: Kernel, w: Sequence, m: int) -> Dict[MultiIndex, object]:
    """Monomial coefficients of k_w^{-m} up to the kernel's truncation"""
    g = series_pow(series_reciprocal(k.a_series), m)
    w_bar = [conj(x) for x in w]
    return {
        alpha: normalize(g[alpha.degree] * multinomial(alpha) * monomial(w_bar, alpha.exponents))
        for alpha in multi_indices_up_to(k.dimension, k.degree)
    }


def inverse_power_membership_check(k: Kernel, p: int, w: Sequence, m: int,
                                   threshold: float = 1.5) -> MembershipReport:
    """Numerical evidence that k_w^{-m} lies in H(k^p)"""
    if p < 1 or m < 1:
        raise ValidationError(f"Membership check needs p, m >= 1, got p={p}, m={m}",
                              invariant="p >= 1 and m >= 1")
    check_in_ball(w, k.dimension)

    power = kernel_power(k, p)
    coeffs = inverse_power_coeffs(k, w, m)
    half = k.degree // 2
    norm_half = rkhs_norm_sq(power, coeffs, upto=half)
    norm_full = rkhs_norm_sq(power, coeffs)
    ratio = float(norm_full) / float(norm_half)

    report = MembershipReport(
        kernel=k.label, p=p, m=m, point=tuple(w),
        degree_half=half, degree_full=k.degree,
        norm_sq_half=norm_half, norm_sq_full=norm_full,
        growth_ratio=ratio, threshold=threshold,
        diverging=ratio > threshold,
    )
    logger.info("Membership check completed", kernel=k.label, p=p, m=m,
                growth_ratio=ratio, diverging=report.diverging)
    return report
