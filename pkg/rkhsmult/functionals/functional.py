#!/usr/bin/env python3
"""
Linear functionals given by their values on monomials

A Functional stores Lambda(z^alpha) for every |alpha| <= N. Values are either
all exact (Fraction / GaussianRational) or floating point, and the mode is
reported by every computation that consumes them.
"""

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

from ..errors import DegreeOutOfRange, DimensionMismatch, ValidationError
from ..kernels.cnp import check_in_ball
from ..series.multi_index import MultiIndex, multi_indices_up_to
from ..series.scalars import all_exact, monomial, norm_sq, normalize
from ..utils.logger import get_logger

logger = get_logger(__name__)

EXACT = 'exact'
FLOAT = 'float'


def _format_point(point: Sequence) -> str:
    return '[' + ', '.join(str(x) for x in point) + ']'


@dataclass(frozen=True, eq=False)
class Functional:
    """Lambda on polynomials of degree <= N in d variables"""
    dimension: int
    values: Mapping[MultiIndex, object]
    degree: int
    label: str = 'functional'

    def __post_init__(self):
        if self.dimension < 1 or self.degree < 0:
            raise ValidationError(f"Functional needs d >= 1 and N >= 0, got d={self.dimension}, N={self.degree}",
                                  invariant="dimension >= 1 and degree >= 0")
        table = {}
        for alpha, value in self.values.items():
            if alpha.dimension != self.dimension:
                raise DimensionMismatch(f"Value at {alpha} does not match dimension {self.dimension}")
            if alpha.degree <= self.degree:
                table[alpha] = normalize(value)
        missing = [a for a in multi_indices_up_to(self.dimension, self.degree) if a not in table]
        if missing:
            raise ValidationError(f"Functional {self.label} has no value at {missing[0]}",
                                  invariant="values defined for every |alpha| <= N")
        object.__setattr__(self, 'values', MappingProxyType(table))

    @classmethod
    def from_values(cls, dimension: int, degree: int, values: Mapping[MultiIndex, object],
                    label: str = 'table') -> 'Functional':
        """Missing entries up to degree are zero"""
        table = {alpha: Fraction(0) for alpha in multi_indices_up_to(dimension, degree)}
        table.update(values)
        return cls(dimension, table, degree, label)

    @property
    def mode(self) -> str:
        return EXACT if all_exact(self.values.values()) else FLOAT

    @property
    def is_exact(self) -> bool:
        return self.mode == EXACT

    @property
    def unit_value(self):
        """Lambda(1)"""
        return self.values[MultiIndex.zero(self.dimension)]

    def value(self, alpha: MultiIndex):
        if alpha.dimension != self.dimension:
            raise DimensionMismatch(f"Multi-index {alpha} does not match dimension {self.dimension}")
        if alpha.degree > self.degree:
            raise DegreeOutOfRange(f"|{alpha}| = {alpha.degree} exceeds functional degree {self.degree}")
        return self.values[alpha]

    __getitem__ = value

    def items(self, upto: Optional[int] = None) -> Iterator[Tuple[MultiIndex, object]]:
        """Graded (alpha, value) pairs with |alpha| <= upto"""
        limit = self.degree if upto is None else min(upto, self.degree)
        for alpha in multi_indices_up_to(self.dimension, limit):
            yield alpha, self.values[alpha]

    def truncate(self, degree: int) -> 'Functional':
        if degree > self.degree:
            raise DegreeOutOfRange(f"Cannot extend functional {self.label} from degree {self.degree} to {degree}")
        return Functional(self.dimension, dict(self.values), degree, self.label)

    def to_float(self) -> 'Functional':
        return Functional(self.dimension, {a: complex(v) for a, v in self.values.items()},
                          self.degree, self.label)

    @property
    def growth_radius(self) -> float:
        """max_n (max_{|alpha|=n} |Lambda(z^alpha)|)^{1/n}"""
        radius = 0.0
        for alpha, value in self.items():
            if alpha.is_zero:
                continue
            magnitude = abs(complex(value))
            if magnitude:
                radius = max(radius, magnitude ** (1.0 / alpha.degree))
        return radius

    def __str__(self) -> str:
        return f"{self.label} on B_{self.dimension} (N={self.degree}, {self.mode})"


@dataclass(frozen=True, eq=False)
class TensorFunctional:
    """Lambda on polynomials in (x, s) in B_d x B_d, values at (alpha, beta)"""
    dimension: int
    values: Mapping[Tuple[MultiIndex, MultiIndex], object]
    degree: int
    label: str = 'tensor functional'

    def __post_init__(self):
        table = {}
        for (alpha, beta), value in self.values.items():
            if alpha.dimension != self.dimension or beta.dimension != self.dimension:
                raise DimensionMismatch(f"Value at ({alpha}, {beta}) does not match dimension {self.dimension}")
            if alpha.degree + beta.degree <= self.degree:
                table[(alpha, beta)] = normalize(value)
        for joint in multi_indices_up_to(2 * self.dimension, self.degree):
            if joint.split(self.dimension) not in table:
                raise ValidationError(f"Tensor functional {self.label} has no value at {joint}",
                                      invariant="values defined on the full truncated grid")
        object.__setattr__(self, 'values', MappingProxyType(table))

    @classmethod
    def from_values(cls, dimension: int, degree: int, values: Mapping, label: str = 'tensor table'):
        table = {joint.split(dimension): Fraction(0)
                 for joint in multi_indices_up_to(2 * dimension, degree)}
        table.update(values)
        return cls(dimension, table, degree, label)

    @property
    def mode(self) -> str:
        return EXACT if all_exact(self.values.values()) else FLOAT

    def value(self, alpha: MultiIndex, beta: MultiIndex):
        if alpha.degree + beta.degree > self.degree:
            raise DegreeOutOfRange(f"|{alpha}| + |{beta}| exceeds functional degree {self.degree}")
        return self.values[(alpha, beta)]

    def truncate(self, degree: int) -> 'TensorFunctional':
        if degree > self.degree:
            raise DegreeOutOfRange(f"Cannot extend functional {self.label} from degree {self.degree} to {degree}")
        return TensorFunctional(self.dimension, dict(self.values), degree, self.label)

    def to_float(self) -> 'TensorFunctional':
        return TensorFunctional(self.dimension, {key: complex(v) for key, v in self.values.items()},
                                self.degree, self.label)

    def flatten(self) -> Functional:
        """The same functional on 2d variables (x, s)"""
        return Functional(2 * self.dimension,
                          {alpha.concat(beta): v for (alpha, beta), v in self.values.items()},
                          self.degree, self.label)

    def left_marginal(self) -> Functional:
        """alpha -> Lambda(x^alpha), the action on functions of x alone"""
        zero = MultiIndex.zero(self.dimension)
        return Functional(self.dimension,
                          {alpha: v for (alpha, beta), v in self.values.items() if beta == zero},
                          self.degree, f"{self.label}|x")

    def right_marginal(self) -> Functional:
        zero = MultiIndex.zero(self.dimension)
        return Functional(self.dimension,
                          {beta: v for (alpha, beta), v in self.values.items() if alpha == zero},
                          self.degree, f"{self.label}|s")

    @property
    def growth_radius(self) -> float:
        return self.flatten().growth_radius


# Constructors -------------------------------------------------------------------

def point_functional(v: Sequence, degree: int = 24) -> Functional:
    """Lambda(f) = f(v) for v in the open ball of dimension len(v)"""
    dimension = len(v)
    check_in_ball(v, dimension)
    values = {alpha: monomial(v, alpha.exponents) for alpha in multi_indices_up_to(dimension, degree)}
    return Functional(dimension, values, degree, f"point({_format_point(v)})")


def point_evaluation(k, v: Sequence, degree: Optional[int] = None) -> Functional:
    """Evaluation at v, sized to the kernel k"""
    check_in_ball(v, k.dimension)
    return point_functional(v, k.degree if degree is None else degree)


def counterexample_functional(degree: int = 24) -> Functional:
    """Lambda(f) = f(0) + f'(0) on the disc: linear, not multiplicative"""
    if degree < 1:
        raise DegreeOutOfRange("The counterexample functional needs degree >= 1")
    values = {MultiIndex.of(n): Fraction(1) if n <= 1 else Fraction(0) for n in range(degree + 1)}
    return Functional(1, values, degree, 'counterexample')


def boundary_limit_ones(dimension: int = 1, degree: int = 24) -> Functional:
    """Lambda(z^alpha) = 1 for all alpha"""
    values = {alpha: Fraction(1) for alpha in multi_indices_up_to(dimension, degree)}
    return Functional(dimension, values, degree, 'boundary_limit_ones')


def boundary_limit(xi: Sequence, degree: int = 24, tolerance: float = 1e-12) -> Functional:
    """Limit of evaluations approaching the unit vector xi: Lambda(z^alpha) = xi^alpha"""
    size = norm_sq(xi)
    on_sphere = size == 1 if all_exact(xi) else abs(float(size) - 1.0) <= tolerance
    if not on_sphere:
        raise ValidationError(f"Boundary point {_format_point(xi)} has |xi|^2 = {size}",
                              invariant="|xi| = 1")
    dimension = len(xi)
    values = {alpha: monomial(xi, alpha.exponents) for alpha in multi_indices_up_to(dimension, degree)}
    return Functional(dimension, values, degree, f"boundary_limit({_format_point(xi)})")


def tensor_point(y: Sequence, t: Sequence, degree: int = 24) -> TensorFunctional:
    """Evaluation at (y, t) in B_d x B_d"""
    if len(y) != len(t):
        raise DimensionMismatch(f"Tensor point parts have {len(y)} and {len(t)} coordinates")
    dimension = len(y)
    check_in_ball(y, dimension)
    check_in_ball(t, dimension)
    values = {}
    for joint in multi_indices_up_to(2 * dimension, degree):
        alpha, beta = joint.split(dimension)
        values[(alpha, beta)] = monomial(y, alpha.exponents) * monomial(t, beta.exponents)
    return TensorFunctional(dimension, values, degree,
                            f"tensor_point({_format_point(y)}, {_format_point(t)})")


def tensor_functional(left: Functional, right: Functional, degree: Optional[int] = None) -> TensorFunctional:
    """values[(alpha, beta)] = left[alpha] * right[beta]"""
    if left.dimension != right.dimension:
        raise DimensionMismatch(f"Tensor factors on B_{left.dimension} and B_{right.dimension}")
    degree = min(left.degree, right.degree) if degree is None else degree
    dimension = left.dimension
    values: Dict = {}
    for joint in multi_indices_up_to(2 * dimension, degree):
        alpha, beta = joint.split(dimension)
        values[(alpha, beta)] = left.value(alpha) * right.value(beta)
    return TensorFunctional(dimension, values, degree, f"tensor({left.label}, {right.label})")
