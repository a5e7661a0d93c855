#!/usr/bin/env python3
"""
Exact one-variable formal power series

A RationalSeries holds c_0..c_N as Fractions. Every binary operation
truncates to the smaller of the two truncation degrees; nothing is ever
extended silently.
"""

from dataclasses import dataclass
from math import comb
from fractions import Fraction
from typing import Callable, Tuple

from ..errors import ValidationError, ZeroConstantTerm


@dataclass(frozen=True)
class RationalSeries:
    """Coefficients c_0..c_N of a series in t, truncated at degree N"""
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not coeffs:
            raise ValidationError("A series needs at least the constant term",
                                  invariant="len(coeffs) == N + 1 with N >= 0")
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def from_function(cls, term: Callable[[int], Fraction], degree: int) -> 'RationalSeries':
        return cls(tuple(term(n) for n in range(degree + 1)))

    @classmethod
    def unit(cls, degree: int) -> 'RationalSeries':
        return cls((Fraction(1),) + (Fraction(0),) * degree)

    @classmethod
    def zero(cls, degree: int) -> 'RationalSeries':
        return cls((Fraction(0),) * (degree + 1))

    @classmethod
    def of(cls, *coeffs, degree: int = None) -> 'RationalSeries':
        """Series from leading coefficients, zero padded up to degree"""
        values = [Fraction(c) for c in coeffs]
        if degree is not None:
            values = (values + [Fraction(0)] * (degree + 1))[:degree + 1]
        return cls(tuple(values))

    @property
    def truncation_degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, degree: int) -> 'RationalSeries':
        if degree > self.truncation_degree:
            raise ValidationError(f"Cannot extend a series of degree {self.truncation_degree} to {degree}",
                                  invariant="truncation never extends")
        return RationalSeries(self.coeffs[:degree + 1])

    def __str__(self) -> str:
        head = ', '.join(str(c) for c in self.coeffs[:6])
        more = ', ...' if len(self.coeffs) > 6 else ''
        return f"({head}{more}; N={self.truncation_degree})"


def _common_degree(a: RationalSeries, b: RationalSeries) -> int:
    return min(a.truncation_degree, b.truncation_degree)


def series_add(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    n = _common_degree(a, b)
    return RationalSeries(tuple(a[i] + b[i] for i in range(n + 1)))


def series_sub(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    n = _common_degree(a, b)
    return RationalSeries(tuple(a[i] - b[i] for i in range(n + 1)))


def series_scale(a: RationalSeries, factor) -> RationalSeries:
    factor = Fraction(factor)
    return RationalSeries(tuple(factor * c for c in a))


def series_mul(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    """Cauchy product truncated at min(N_a, N_b)"""
    n = _common_degree(a, b)
    return RationalSeries(tuple(
        sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0))
        for k in range(n + 1)
    ))


def series_reciprocal(a: RationalSeries) -> RationalSeries:
    """1/a via c_0 = 1/a_0, c_n = -(1/a_0) sum_{j=1..n} a_j c_{n-j}"""
    if a[0] == 0:
        raise ZeroConstantTerm("Series reciprocal needs a nonzero constant term")
    inverse_lead = 1 / a[0]
    out = [inverse_lead]
    for n in range(1, a.truncation_degree + 1):
        acc = sum((a[j] * out[n - j] for j in range(1, n + 1)), Fraction(0))
        out.append(-inverse_lead * acc)
    return RationalSeries(tuple(out))


def series_pow(a: RationalSeries, p: int) -> RationalSeries:
    """a^p for p >= 1 by binary powering of Cauchy products"""
    if p < 1:
        raise ValidationError(f"Series power needs p >= 1, got {p}", invariant="p >= 1")
    result = None
    base = a
    while p:
        if p & 1:
            result = base if result is None else series_mul(result, base)
        p >>= 1
        if p:
            base = series_mul(base, base)
    return result


def series_abs(a: RationalSeries) -> RationalSeries:
    return RationalSeries(tuple(abs(c) for c in a))


def evaluate(a: RationalSeries, t, upto: int = None):
    """Horner evaluation of sum_{n<=upto} c_n t^n for any scalar t"""
    upto = a.truncation_degree if upto is None else min(upto, a.truncation_degree)
    acc = a[upto]
    for n in range(upto - 1, -1, -1):
        acc = acc * t + a[n]
    return acc


def max_ratio(a: RationalSeries) -> float:
    """Empirical max of |c_{n+1}/c_n| over the truncation (zero terms skipped)"""
    ratios = [abs(a[n + 1] / a[n]) for n in range(a.truncation_degree) if a[n] != 0]
    return float(max(ratios)) if ratios else 0.0


def tail_estimate(a: RationalSeries, rho: float) -> float:
    """|c_N| rho^{N+1} R / (1 - rho R); inf when rho R >= 1"""
    ratio = max_ratio(a)
    last = abs(float(a[a.truncation_degree]))
    if last == 0.0 or rho == 0.0:
        return 0.0
    if rho * ratio >= 1.0:
        return float('inf')
    return last * rho ** (a.truncation_degree + 1) * ratio / (1.0 - rho * ratio)


def binomial_series_coefficient(n: int, p: int) -> int:
    """binom(n + p - 1, p - 1), the t^n coefficient of (1 - t)^{-p}"""
    return comb(n + p - 1, p - 1)
