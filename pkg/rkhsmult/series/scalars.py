#!/usr/bin/env python3
"""
Scalar helpers shared by every module

Exact mode works over Fraction and GaussianRational (a + bi with rational
a, b); float mode works over Python complex. The helpers here accept either
so algorithms can be written once.
"""

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Iterable, Sequence, Union

_ExactOperand = (int, Fraction)


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """Complex number with exact rational real and imaginary parts"""
    real: Fraction
    imag: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'real', Fraction(self.real))
        object.__setattr__(self, 'imag', Fraction(self.imag))

    @classmethod
    def coerce(cls, value) -> 'GaussianRational':
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, _ExactOperand):
            return cls(Fraction(value))
        raise TypeError(f"Cannot represent {value!r} exactly")

    # Arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (GaussianRational,) + _ExactOperand):
            other = GaussianRational.coerce(other)
            return GaussianRational(self.real + other.real, self.imag + other.imag)
        if isinstance(other, (float, complex)):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.real, -self.imag)

    def __sub__(self, other):
        if isinstance(other, (GaussianRational,) + _ExactOperand + (float, complex)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (GaussianRational,) + _ExactOperand):
            other = GaussianRational.coerce(other)
            return GaussianRational(self.real * other.real - self.imag * other.imag,
                                    self.real * other.imag + self.imag * other.real)
        if isinstance(other, (float, complex)):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (GaussianRational,) + _ExactOperand):
            other = GaussianRational.coerce(other)
            denominator = other.abs_sq()
            if denominator == 0:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational(
                (self.real * other.real + self.imag * other.imag) / denominator,
                (self.imag * other.real - self.real * other.imag) / denominator)
        if isinstance(other, (float, complex)):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _ExactOperand):
            return GaussianRational(Fraction(other)) / self
        if isinstance(other, (float, complex)):
            return other / complex(self)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return 1 / (self ** -exponent)
        result = GaussianRational(Fraction(1))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Queries ----------------------------------------------------------------

    def conjugate(self) -> 'GaussianRational':
        return GaussianRational(self.real, -self.imag)

    def abs_sq(self) -> Fraction:
        return self.real * self.real + self.imag * self.imag

    def __abs__(self) -> float:
        return math.sqrt(self.abs_sq())

    def __complex__(self) -> complex:
        return complex(float(self.real), float(self.imag))

    def __bool__(self) -> bool:
        return bool(self.real) or bool(self.imag)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.real == other.real and self.imag == other.imag
        if isinstance(other, _ExactOperand):
            return self.imag == 0 and self.real == other
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.imag == 0:
            return hash(self.real)
        return hash((self.real, self.imag))

    def __repr__(self) -> str:
        return f"GaussianRational({self.real}, {self.imag})"

    def __str__(self) -> str:
        if self.imag == 0:
            return str(self.real)
        sign = '+' if self.imag >= 0 else '-'
        return f"{self.real}{sign}{abs(self.imag)}i"


Scalar = Union[int, Fraction, GaussianRational, float, complex]


def is_exact(value) -> bool:
    """True for int, Fraction and GaussianRational values"""
    return isinstance(value, (GaussianRational, Rational)) and not isinstance(value, bool)


def all_exact(values: Iterable) -> bool:
    return all(is_exact(v) for v in values)


def normalize(value):
    """Collapse a real GaussianRational to a Fraction"""
    if isinstance(value, GaussianRational) and value.imag == 0:
        return value.real
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


def conj(value):
    return value.conjugate()


def abs_sq(value):
    """|value|^2, exact for exact inputs"""
    if isinstance(value, GaussianRational):
        return value.abs_sq()
    if isinstance(value, Rational):
        return Fraction(value) * Fraction(value)
    return abs(value) ** 2


def to_complex(value) -> complex:
    return complex(value)


def to_exact(value):
    """Convert a float/complex to the nearest exact value via its decimal repr"""
    if is_exact(value):
        return normalize(value)
    if isinstance(value, complex):
        return normalize(GaussianRational(Fraction(repr(value.real)), Fraction(repr(value.imag))))
    return Fraction(repr(float(value)))


def monomial(point: Sequence, exponents: Sequence[int]):
    """point^alpha = prod point_i ** alpha_i"""
    return reduce(operator.mul, (x ** e for x, e in zip(point, exponents) if e), Fraction(1))


def norm_sq(point: Sequence):
    """Squared Euclidean norm of a point in C^d"""
    return sum((abs_sq(x) for x in point), Fraction(0))


def norm_l1(point: Sequence) -> float:
    return float(sum(abs(complex(x)) for x in point))
