#!/usr/bin/env python3
"""
CNP transform of unitarily invariant kernels

For k = sum a_n t^n the b-series is 1 - 1/k = sum_{n>=1} b_n t^n. An
irreducible unitarily invariant k is CNP iff every b_n >= 0. At a finite
truncation a negative b_n is a certificate of failure; all b_n >= 0 is
only evidence.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence

from ..errors import DegreeOutOfRange, DimensionMismatch, NotCnp, OutsideBall, ZeroIndex
from ..series.core import RationalSeries, series_reciprocal, series_sub
from ..series.multi_index import MultiIndex, multi_indices_up_to, multinomial
from ..series.scalars import conj, monomial, norm_sq
from ..utils.logger import get_logger
from .kernel import Kernel

logger = get_logger(__name__)


@dataclass(frozen=True)
class CnpData:
    """b-series of a kernel and its CNP verdict up to the truncation"""
    b_series: RationalSeries
    is_cnp_up_to_N: bool
    first_negative_index: Optional[int]
    is_normalized: bool

    @property
    def degree(self) -> int:
        return self.b_series.truncation_degree

    def to_dict(self) -> Dict:
        return {
            'degree': self.degree,
            'b_series': [str(b) for b in self.b_series],
            'is_cnp_up_to_N': self.is_cnp_up_to_N,
            'first_negative_index': self.first_negative_index,
            'is_normalized': self.is_normalized,
            'verdict_strength': ('certificate of failure' if not self.is_cnp_up_to_N
                                 else 'evidence up to N only'),
        }


def cnp_transform(k: Kernel) -> CnpData:
    """b = 1 - 1/a, exact up to the kernel's truncation degree"""
    unit = RationalSeries.unit(k.degree)
    b = series_sub(unit, series_reciprocal(k.a_series))
    b = RationalSeries((Fraction(0),) + b.coeffs[1:])

    first_negative = next((n for n in range(1, b.truncation_degree + 1) if b[n] < 0), None)
    data = CnpData(
        b_series=b,
        is_cnp_up_to_N=first_negative is None,
        first_negative_index=first_negative,
        is_normalized=b.truncation_degree >= 1 and b[1] == 1,
    )
    logger.info("CNP transform completed", kernel=k.label, degree=k.degree,
                is_cnp=data.is_cnp_up_to_N, first_negative_index=first_negative)
    return data


def reconstruct_kernel_series(cnp: CnpData) -> RationalSeries:
    """a = 1/(1 - b); left inverse of cnp_transform"""
    unit = RationalSeries.unit(cnp.degree)
    return series_reciprocal(series_sub(unit, cnp.b_series))


def require_cnp(k: Kernel) -> CnpData:
    cnp = k.cnp
    if not cnp.is_cnp_up_to_N:
        raise NotCnp(f"Kernel {k.label} is not CNP: b_{cnp.first_negative_index} = "
                     f"{cnp.b_series[cnp.first_negative_index]} < 0",
                     first_negative_index=cnp.first_negative_index)
    return cnp


def b_alpha(k: Kernel, alpha: MultiIndex) -> Fraction:
    """b_|alpha| * multinomial(alpha) for nonzero alpha"""
    if alpha.dimension != k.dimension:
        raise DimensionMismatch(f"Multi-index {alpha} has dimension {alpha.dimension}, kernel has {k.dimension}")
    if alpha.is_zero:
        raise ZeroIndex("b_alpha is defined for nonzero alpha only")
    if alpha.degree > k.degree:
        raise DegreeOutOfRange(f"|{alpha}| = {alpha.degree} exceeds truncation degree {k.degree}")
    return k.cnp.b_series[alpha.degree] * multinomial(alpha)


def check_in_ball(point: Sequence, dimension: int) -> None:
    if len(point) != dimension:
        raise DimensionMismatch(f"Point has {len(point)} coordinates, expected {dimension}")
    if norm_sq(point) >= 1:
        raise OutsideBall(f"Point {tuple(str(x) for x in point)} is not in the open unit ball")


def inverse_kernel_coeffs(k: Kernel, w: Sequence) -> Dict[MultiIndex, object]:
    """Coefficients of 1/k_w = 1 - sum_alpha b_alpha conj(w)^alpha z^alpha"""
    check_in_ball(w, k.dimension)
    w_bar = [conj(x) for x in w]
    coeffs: Dict[MultiIndex, object] = {}
    for alpha in multi_indices_up_to(k.dimension, k.degree):
        if alpha.is_zero:
            coeffs[alpha] = Fraction(1)
        else:
            coeffs[alpha] = -b_alpha(k, alpha) * monomial(w_bar, alpha.exponents)
    return coeffs
