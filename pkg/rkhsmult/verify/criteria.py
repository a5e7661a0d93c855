#!/usr/bin/env python3
"""
Kernel-function criteria for multiplicativity

Each criterion compares Lambda applied to inverse kernel functions against
Lambda applied to the kernel function of the combined kernel:

- power:  Lambda(1/k_w)^p * Lambda(k_w^p) = 1
- schur:  Lambda(1/k1_w) Lambda(1/k2_w) Lambda((k1 k2)_w) = 1
- tensor: Lambda(1/k1_y) Lambda(1/k2_t) Lambda(k1_y (x) k2_t) = 1

Strategies compute one sample at a time; CriterionManager dispatches by kind
and aggregates samples in input order.
"""

import asyncio
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import DimensionMismatch, OutsideBall, ValidationError
from ..functionals.action import (
    apply_to_inverse_kernel, apply_to_inverse_kernels_tensor, apply_to_kernel_function,
    apply_to_tensor_kernel, functional_norm_sq_truncated, tensor_norm_sq_truncated,
)
from ..functionals.functional import Functional, TensorFunctional
from ..kernels.cnp import require_cnp
from ..kernels.kernel import Kernel, TensorKernel, kernel_power, schur_product
from ..series.core import RationalSeries, series_abs, tail_estimate
from ..series.scalars import norm_l1, norm_sq, normalize
from ..utils.logger import get_logger
from .reports import FAIL, CriterionReport, HypothesisFlags, SampleResidual

logger = get_logger(__name__)

MAX_SAMPLE_RADIUS = 0.5


def _residual(product):
    """|product - 1|, exact when the defect is real and exact"""
    defect = normalize(product - 1)
    if isinstance(defect, Fraction):
        return abs(defect)
    return abs(complex(defect))


def _series_tail(series: RationalSeries, degree: int, rho: float) -> float:
    return tail_estimate(series.truncate(min(degree, series.truncation_degree)), rho)


def _check_sample(point: Sequence, dimension: int) -> None:
    if len(point) != dimension:
        raise DimensionMismatch(f"Sample point has {len(point)} coordinates, expected {dimension}")
    if float(norm_sq(point)) > MAX_SAMPLE_RADIUS ** 2:
        raise OutsideBall(f"Sample point {tuple(str(x) for x in point)} has modulus above {MAX_SAMPLE_RADIUS}")


class CriterionStrategy(ABC):
    """Abstract base class for all multiplicativity criteria"""

    @abstractmethod
    def validate(self, functional, kernels: Sequence[Kernel], p: Optional[int]) -> None:
        """Raise if the criterion's preconditions fail"""
        pass

    @abstractmethod
    def evaluate(self, functional, kernels: Sequence[Kernel], p: Optional[int],
                 sample: Tuple) -> Tuple[object, object, object, float]:
        """Return (inverse side, kernel side, product, tail estimate) at one sample"""
        pass

    @abstractmethod
    def hypothesis(self, functional, kernels: Sequence[Kernel], p: Optional[int],
                   tolerance: float) -> HypothesisFlags:
        pass

    @abstractmethod
    def get_kind(self) -> str:
        pass

    def degree(self, functional, kernels: Sequence[Kernel]) -> int:
        return min([functional.degree] + [k.degree for k in kernels])

    def kernel_labels(self, kernels: Sequence[Kernel], p: Optional[int]) -> List[str]:
        return [k.label for k in kernels]


class PowerCriterion(CriterionStrategy):
    """[Lambda(1/k_w)]^p = 1/Lambda(k_w^p)"""

    def validate(self, functional: Functional, kernels, p):
        if len(kernels) != 1:
            raise ValidationError("The power criterion takes one kernel", invariant="one kernel")
        if p is None or p < 1:
            raise ValidationError(f"The power criterion needs p >= 1, got {p}", invariant="p >= 1")
        (k,) = kernels
        if not isinstance(functional, Functional) or functional.dimension != k.dimension:
            raise DimensionMismatch(f"Functional and kernel {k.label} must live on the same ball")
        require_cnp(k)

    def evaluate(self, functional, kernels, p, sample):
        (k,) = kernels
        (w,) = sample
        _check_sample(w, k.dimension)
        power = kernel_power(k, p)
        inverse = apply_to_inverse_kernel(functional, k, w)
        direct = apply_to_kernel_function(functional, power, w)
        product = inverse ** p * direct

        degree = self.degree(functional, kernels)
        rho = functional.growth_radius * norm_l1(w)
        tail_direct = _series_tail(power.a_series, degree, rho)
        tail_inverse = _series_tail(series_abs(k.cnp.b_series), degree, rho)
        x, y = abs(complex(inverse)), abs(complex(direct))
        tail = x ** p * tail_direct + p * x ** (p - 1) * y * tail_inverse
        return inverse ** p, direct, product, tail

    def hypothesis(self, functional, kernels, p, tolerance):
        (k,) = kernels
        return HypothesisFlags(functional_norm_sq_truncated(functional, kernel_power(k, p)),
                               functional.unit_value, tolerance)

    def get_kind(self) -> str:
        return 'power'

    def kernel_labels(self, kernels, p):
        return [kernels[0].label, kernel_power(kernels[0], p).label]


class SchurCriterion(CriterionStrategy):
    """Lambda(1/k1_w) Lambda(1/k2_w) = 1/Lambda(k_w) with k = k1 k2"""

    def validate(self, functional: Functional, kernels, p):
        if len(kernels) != 2:
            raise ValidationError("The Schur criterion takes two kernels", invariant="two kernels")
        k1, k2 = kernels
        if k1.dimension != k2.dimension:
            raise DimensionMismatch(f"Schur factors on B_{k1.dimension} and B_{k2.dimension}")
        if not isinstance(functional, Functional) or functional.dimension != k1.dimension:
            raise DimensionMismatch("Functional and kernels must live on the same ball")
        require_cnp(k1)
        require_cnp(k2)

    def evaluate(self, functional, kernels, p, sample):
        k1, k2 = kernels
        (w,) = sample
        _check_sample(w, k1.dimension)
        product_kernel = schur_product(k1, k2)
        first = apply_to_inverse_kernel(functional, k1, w)
        second = apply_to_inverse_kernel(functional, k2, w)
        direct = apply_to_kernel_function(functional, product_kernel, w)
        inverse = first * second
        product = inverse * direct

        degree = self.degree(functional, kernels)
        rho = functional.growth_radius * norm_l1(w)
        x1, x2, y = abs(complex(first)), abs(complex(second)), abs(complex(direct))
        tail = (x1 * x2 * _series_tail(product_kernel.a_series, degree, rho)
                + x2 * y * _series_tail(series_abs(k1.cnp.b_series), degree, rho)
                + x1 * y * _series_tail(series_abs(k2.cnp.b_series), degree, rho))
        return inverse, direct, product, tail

    def hypothesis(self, functional, kernels, p, tolerance):
        return HypothesisFlags(functional_norm_sq_truncated(functional, schur_product(*kernels)),
                               functional.unit_value, tolerance)

    def get_kind(self) -> str:
        return 'schur'

    def kernel_labels(self, kernels, p):
        return [kernels[0].label, kernels[1].label, schur_product(*kernels).label]


class TensorCriterion(CriterionStrategy):
    """Lambda(1/k1_y) Lambda(1/k2_t) = 1/Lambda(k_(y,t)) with k = k1 (x) k2"""

    def validate(self, functional: TensorFunctional, kernels, p):
        if len(kernels) != 2:
            raise ValidationError("The tensor criterion takes two kernels", invariant="two kernels")
        tk = TensorKernel(*kernels)
        if not isinstance(functional, TensorFunctional) or functional.dimension != tk.dimension:
            raise DimensionMismatch("The tensor criterion needs a tensor functional on the same product of balls")
        require_cnp(tk.left)
        require_cnp(tk.right)

    def evaluate(self, functional, kernels, p, sample):
        tk = TensorKernel(*kernels)
        y, t = sample
        _check_sample(y, tk.dimension)
        _check_sample(t, tk.dimension)
        first, second = apply_to_inverse_kernels_tensor(functional, tk, y, t)
        direct = apply_to_tensor_kernel(functional, tk, y, t)
        inverse = first * second
        product = inverse * direct

        degree = min(functional.degree, tk.degree)
        rho = functional.growth_radius * max(norm_l1(y), norm_l1(t))
        x1, x2, yv = abs(complex(first)), abs(complex(second)), abs(complex(direct))
        tail = (x1 * x2 * _series_tail(tk.total_degree_series, degree, rho)
                + x2 * yv * _series_tail(series_abs(tk.left.cnp.b_series), degree, rho)
                + x1 * yv * _series_tail(series_abs(tk.right.cnp.b_series), degree, rho))
        return inverse, direct, product, tail

    def hypothesis(self, functional, kernels, p, tolerance):
        tk = TensorKernel(*kernels)
        return HypothesisFlags(tensor_norm_sq_truncated(functional, tk),
                               functional.flatten().unit_value, tolerance)

    def get_kind(self) -> str:
        return 'tensor'

    def kernel_labels(self, kernels, p):
        return [kernels[0].label, kernels[1].label, TensorKernel(*kernels).label]


class CriterionManager:
    """Manager class that coordinates the criterion strategies"""

    def __init__(self):
        self.strategies: Dict[str, CriterionStrategy] = {
            'power': PowerCriterion(),
            'schur': SchurCriterion(),
            'tensor': TensorCriterion(),
        }

    def get_available_kinds(self) -> List[str]:
        return list(self.strategies.keys())

    def _strategy(self, kind: str) -> CriterionStrategy:
        if kind not in self.strategies:
            raise ValidationError(f"Unsupported criterion kind: {kind}", invariant="kind in power|schur|tensor")
        return self.strategies[kind]

    def _sample(self, strategy, functional, kernels, p, sample, tolerance) -> SampleResidual:
        inverse, direct, product, tail = strategy.evaluate(functional, kernels, p, sample)
        return SampleResidual(point=tuple(sample), inverse_side=inverse, kernel_side=direct,
                              residual=_residual(product), tail_estimate=tail, tolerance=tolerance)

    def _report(self, strategy, functional, kernels, p, tolerance, samples) -> CriterionReport:
        report = CriterionReport(
            criterion_kind=strategy.get_kind(),
            functional=functional.label,
            kernels=strategy.kernel_labels(kernels, p),
            p=p,
            mode=functional.mode,
            degree=strategy.degree(functional, kernels),
            tolerance=tolerance,
            samples=samples,
            hypothesis_flags=strategy.hypothesis(functional, kernels, p, tolerance),
        )
        logger.info("Criterion checked", kind=report.criterion_kind, functional=report.functional,
                    samples=len(samples), max_residual=float(report.max_residual), verdict=report.verdict)
        return report

    def check(self, kind: str, functional, kernels: Sequence[Kernel], samples: Sequence[Tuple],
              tolerance: float = 1e-9, p: Optional[int] = None) -> CriterionReport:
        """Run a criterion over samples; each sample is a tuple of points"""
        strategy = self._strategy(kind)
        kernels = tuple(kernels)
        strategy.validate(functional, kernels, p)
        results = [self._sample(strategy, functional, kernels, p, s, tolerance) for s in samples]
        return self._report(strategy, functional, kernels, p, tolerance, results)

    async def check_async(self, kind: str, functional, kernels: Sequence[Kernel], samples: Sequence[Tuple],
                          tolerance: float = 1e-9, p: Optional[int] = None) -> CriterionReport:
        """Same as check(), with samples computed concurrently; order is preserved"""
        strategy = self._strategy(kind)
        kernels = tuple(kernels)
        strategy.validate(functional, kernels, p)
        results = await asyncio.gather(*(
            asyncio.to_thread(self._sample, strategy, functional, kernels, p, s, tolerance)
            for s in samples
        ))
        return self._report(strategy, functional, kernels, p, tolerance, list(results))


_manager = CriterionManager()


def _single(samples: Sequence) -> List[Tuple]:
    return [(tuple(w),) for w in samples]


def check_power_criterion(functional: Functional, k: Kernel, p: int, samples: Sequence,
                          tolerance: float = 1e-9) -> CriterionReport:
    return _manager.check('power', functional, (k,), _single(samples), tolerance, p=p)


def check_schur_criterion(functional: Functional, k1: Kernel, k2: Kernel, samples: Sequence,
                          tolerance: float = 1e-9) -> CriterionReport:
    return _manager.check('schur', functional, (k1, k2), _single(samples), tolerance)


def check_tensor_criterion(functional: TensorFunctional, k1: Kernel, k2: Kernel,
                           samples: Sequence[Tuple[Sequence, Sequence]],
                           tolerance: float = 1e-9) -> CriterionReport:
    pairs = [(tuple(y), tuple(t)) for y, t in samples]
    return _manager.check('tensor', functional, (k1, k2), pairs, tolerance)


def tensor_criterion_witness_degree(functional: TensorFunctional, k1: Kernel, k2: Kernel,
                                    samples: Sequence[Tuple[Sequence, Sequence]],
                                    tolerance: float = 1e-9) -> Optional[int]:
    """Smallest truncation degree at which the tensor criterion fails, if any"""
    for degree in range(1, functional.degree + 1):
        report = check_tensor_criterion(functional.truncate(degree), k1, k2, samples, tolerance)
        if report.verdict == FAIL:
            return degree
    return None
