#!/usr/bin/env python3
"""
Unitarily invariant kernels on the unit ball B_d

A kernel is k(z, w) = sum_n a_n <z, w>^n with a_0 = 1 and a_n > 0, stored as
its exact coefficient series truncated at degree N. Monomial coefficients
follow a_alpha = a_|alpha| * multinomial(alpha).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from ..errors import DegreeOutOfRange, DimensionMismatch, OutsideBall, UnreliableTail, ValidationError
from ..series.core import (
    RationalSeries, evaluate, max_ratio, series_mul, series_pow, tail_estimate,
)
from ..series.multi_index import MultiIndex, multinomial
from ..utils.logger import get_logger

logger = get_logger(__name__)

TAIL_METHOD = "empirical max coefficient ratio (estimate)"


@dataclass(frozen=True)
class Kernel:
    """Unitarily invariant kernel on B_d given by its a_n series"""
    dimension: int
    a_series: RationalSeries
    label: str = "k"

    def __post_init__(self):
        if self.dimension < 1:
            raise ValidationError(f"Kernel dimension must be >= 1, got {self.dimension}",
                                  invariant="dimension >= 1")
        if self.a_series[0] != 1:
            raise ValidationError(f"Kernel {self.label} has a_0 = {self.a_series[0]}",
                                  invariant="a_0 = 1")
        for n, a_n in enumerate(self.a_series):
            if a_n <= 0:
                raise ValidationError(f"Kernel {self.label} has a_{n} = {a_n}",
                                      invariant="a_n > 0 for all n <= N")

    @property
    def degree(self) -> int:
        return self.a_series.truncation_degree

    @cached_property
    def cnp(self):
        """CNP data, computed once per kernel"""
        from .cnp import cnp_transform
        return cnp_transform(self)

    def __str__(self) -> str:
        return f"{self.label} on B_{self.dimension} (N={self.degree})"


@dataclass(frozen=True)
class TensorKernel:
    """k((x, s), (y, t)) = k1(x, y) k2(s, t) on B_d x B_d"""
    left: Kernel
    right: Kernel

    def __post_init__(self):
        if self.left.dimension != self.right.dimension:
            raise DimensionMismatch(
                f"Tensor factors live on B_{self.left.dimension} and B_{self.right.dimension}")

    @property
    def dimension(self) -> int:
        return self.left.dimension

    @property
    def degree(self) -> int:
        return min(self.left.degree, self.right.degree)

    @property
    def label(self) -> str:
        return f"tensor({self.left.label}, {self.right.label})"

    def coefficient(self, alpha: MultiIndex, beta: MultiIndex) -> Fraction:
        return a_alpha(self.left, alpha) * a_alpha(self.right, beta)

    @property
    def total_degree_series(self) -> RationalSeries:
        """Coefficients of the kernel restricted to the diagonal ray, for tail bounds"""
        return series_mul(self.left.a_series, self.right.a_series)


@dataclass(frozen=True)
class KernelValue:
    """Truncated kernel value with its heuristic tail estimate"""
    value: complex
    tail_estimate: float
    ratio_bound: float
    degree: int
    method: str = TAIL_METHOD


# Kernel families -------------------------------------------------------------

def szego(dimension: int = 1, degree: int = 24) -> Kernel:
    """a_n = 1; the Drury-Arveson kernel when dimension > 1"""
    label = "szego" if dimension == 1 else f"drury_arveson({dimension})"
    return Kernel(dimension, RationalSeries.from_function(lambda n: Fraction(1), degree), label)


def drury_arveson(dimension: int, degree: int = 24) -> Kernel:
    return Kernel(dimension, RationalSeries.from_function(lambda n: Fraction(1), degree),
                  f"drury_arveson({dimension})")


def dirichlet(dimension: int = 1, degree: int = 24) -> Kernel:
    """a_n = 1/(n+1), i.e. k = -log(1 - t)/t"""
    label = "dirichlet" if dimension == 1 else f"dirichlet({dimension})"
    return Kernel(dimension, RationalSeries.from_function(lambda n: Fraction(1, n + 1), degree), label)


def bergman(dimension: int = 1, degree: int = 24) -> Kernel:
    """a_n = n+1, the square of the Szego kernel"""
    kernel = kernel_power(szego(dimension, degree), 2)
    label = "bergman" if dimension == 1 else f"bergman({dimension})"
    return Kernel(kernel.dimension, kernel.a_series, label)


def from_coeffs(coeffs: Sequence, dimension: int = 1, label: str = None) -> Kernel:
    series = RationalSeries(tuple(coeffs))
    label = label or "coeffs([" + ", ".join(str(c) for c in series) + "])"
    return Kernel(dimension, series, label)


# Kernel algebra ------------------------------------------------------------------

@lru_cache(maxsize=256)
def kernel_power(k: Kernel, p: int) -> Kernel:
    """k^p(z, w) = k(z, w)^p"""
    if p < 1:
        raise ValidationError(f"Kernel power needs p >= 1, got {p}", invariant="p >= 1")
    if p == 1:
        return k
    return Kernel(k.dimension, series_pow(k.a_series, p), f"power({k.label}, {p})")


@lru_cache(maxsize=256)
def schur_product(k1: Kernel, k2: Kernel) -> Kernel:
    """Pointwise product k1(z, w) k2(z, w)"""
    if k1.dimension != k2.dimension:
        raise DimensionMismatch(f"Schur product of kernels on B_{k1.dimension} and B_{k2.dimension}")
    return Kernel(k1.dimension, series_mul(k1.a_series, k2.a_series),
                  f"schur({k1.label}, {k2.label})")


def tensor_kernel(k1: Kernel, k2: Kernel) -> TensorKernel:
    return TensorKernel(k1, k2)


# Coefficients and evaluation ---------------------------------------------------

def check_index(k: Kernel, alpha: MultiIndex) -> None:
    if alpha.dimension != k.dimension:
        raise DimensionMismatch(f"Multi-index {alpha} has dimension {alpha.dimension}, kernel has {k.dimension}")
    if alpha.degree > k.degree:
        raise DegreeOutOfRange(f"|{alpha}| = {alpha.degree} exceeds truncation degree {k.degree}")


def a_alpha(k: Kernel, alpha: MultiIndex) -> Fraction:
    """Coefficient of z^alpha conj(w)^alpha in k(z, w)"""
    check_index(k, alpha)
    return k.a_series[alpha.degree] * multinomial(alpha)


def _as_vector(point: Sequence, dimension: int, name: str) -> np.ndarray:
    vector = np.asarray([complex(x) for x in point], dtype=np.complex128)
    if vector.shape != (dimension,):
        raise DimensionMismatch(f"Point {name} has {vector.size} coordinates, expected {dimension}")
    return vector


def kernel_eval(k: Kernel, z: Sequence, w: Sequence, rho_max: float = 0.95) -> KernelValue:
    """Truncated sum_{n<=N} a_n <z, w>^n with a tail estimate"""
    zv = _as_vector(z, k.dimension, "z")
    wv = _as_vector(w, k.dimension, "w")
    z_norm, w_norm = float(np.linalg.norm(zv)), float(np.linalg.norm(wv))
    if z_norm >= 1.0 or w_norm >= 1.0:
        raise OutsideBall(f"kernel_eval needs |z|, |w| < 1, got {z_norm:.6g}, {w_norm:.6g}")
    rho = z_norm * w_norm
    if rho > rho_max:
        raise OutsideBall(f"|z||w| = {rho:.6g} exceeds rho_max = {rho_max}")

    ratio = max_ratio(k.a_series)
    if rho > 0 and rho * ratio >= 1.0:
        raise UnreliableTail(f"rho * R = {rho * ratio:.6g} >= 1 for kernel {k.label}")

    # np.vdot conjugates its first argument: vdot(w, z) = <z, w>
    t = complex(np.vdot(wv, zv))
    value = complex(evaluate(k.a_series, t))
    tail = tail_estimate(k.a_series, rho)
    logger.debug("Kernel evaluated", kernel=k.label, rho=rho, tail=tail)
    return KernelValue(value=value, tail_estimate=tail, ratio_bound=ratio, degree=k.degree)
