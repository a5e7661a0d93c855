#!/usr/bin/env python3
"""
Multi-index bookkeeping

MultiIndex values index monomials z^alpha on C^d. Compositions of a
multi-index (ordered tuples of nonzero parts summing to it) are the
summation domain of the coefficient identities in rkhsmult.verify.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from ..errors import InvalidPartCount, ValidationError


@dataclass(frozen=True, order=True)
class MultiIndex:
    """Exponent tuple alpha in Z_+^d"""
    exponents: Tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(int(e) for e in self.exponents)
        if not exponents:
            raise ValidationError("MultiIndex needs at least one entry", invariant="dimension >= 1")
        if any(e < 0 for e in exponents):
            raise ValidationError(f"Negative exponent in {exponents}", invariant="all entries >= 0")
        object.__setattr__(self, 'exponents', exponents)

    @classmethod
    def of(cls, *exponents: int) -> 'MultiIndex':
        return cls(tuple(exponents))

    @classmethod
    def zero(cls, dimension: int) -> 'MultiIndex':
        return cls((0,) * dimension)

    @classmethod
    def unit(cls, dimension: int, position: int) -> 'MultiIndex':
        exponents = [0] * dimension
        exponents[position] = 1
        return cls(tuple(exponents))

    @property
    def dimension(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_zero(self) -> bool:
        return self.degree == 0

    def __add__(self, other: 'MultiIndex') -> 'MultiIndex':
        return MultiIndex(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __sub__(self, other: 'MultiIndex') -> 'MultiIndex':
        return MultiIndex(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def fits_in(self, other: 'MultiIndex') -> bool:
        """Componentwise self <= other"""
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __iter__(self):
        return iter(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def concat(self, other: 'MultiIndex') -> 'MultiIndex':
        """(alpha, beta) as one multi-index on 2d variables"""
        return MultiIndex(self.exponents + other.exponents)

    def split(self, left_dimension: int) -> Tuple['MultiIndex', 'MultiIndex']:
        return (MultiIndex(self.exponents[:left_dimension]),
                MultiIndex(self.exponents[left_dimension:]))

    def key(self) -> str:
        """Stable text key, used in reports"""
        return ','.join(str(e) for e in self.exponents)

    def __str__(self) -> str:
        return '(' + ','.join(str(e) for e in self.exponents) + ')'


def multinomial(alpha: MultiIndex) -> int:
    """|alpha|! / (alpha_1! ... alpha_d!)"""
    result = math.factorial(alpha.degree)
    for e in alpha.exponents:
        result //= math.factorial(e)
    return result


@lru_cache(maxsize=None)
def _of_degree(dimension: int, degree: int) -> Tuple[MultiIndex, ...]:
    if dimension == 1:
        return (MultiIndex((degree,)),)
    out = []
    for first in range(degree, -1, -1):
        for rest in _of_degree(dimension - 1, degree - first):
            out.append(MultiIndex((first,) + rest.exponents))
    return tuple(out)


def multi_indices_of_degree(dimension: int, degree: int) -> Tuple[MultiIndex, ...]:
    """All alpha in Z_+^d with |alpha| = degree, reverse lexicographic"""
    return _of_degree(dimension, degree)


def multi_indices_up_to(dimension: int, max_degree: int) -> Iterator[MultiIndex]:
    """Graded enumeration of all alpha with |alpha| <= max_degree"""
    for n in range(max_degree + 1):
        yield from _of_degree(dimension, n)


def count_up_to(dimension: int, max_degree: int) -> int:
    return math.comb(max_degree + dimension, dimension)


def _sub_indices(alpha: MultiIndex) -> Iterator[MultiIndex]:
    """Nonzero gamma <= alpha componentwise, lexicographic order"""
    for exponents in itertools.product(*(range(a + 1) for a in alpha.exponents)):
        if any(exponents):
            yield MultiIndex(exponents)


@lru_cache(maxsize=4096)
def _compositions(alpha: MultiIndex, parts: int) -> Tuple[Tuple[MultiIndex, ...], ...]:
    if parts == 1:
        return ((alpha,),) if not alpha.is_zero else ()
    out = []
    for first in _sub_indices(alpha):
        rest = alpha - first
        if rest.degree < parts - 1:
            continue
        for tail in _compositions(rest, parts - 1):
            out.append((first,) + tail)
    return tuple(out)


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of nonzero parts summing to target"""
    parts: Tuple[MultiIndex, ...]
    target: MultiIndex

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValidationError(f"Composition of {self.target} needs at least one part",
                                  invariant="1 <= r <= |alpha|")
        if any(part.dimension != self.target.dimension for part in parts):
            raise ValidationError(f"Composition parts must have dimension {self.target.dimension}",
                                  invariant="parts live in Z_+^d")
        if any(part.is_zero for part in parts):
            raise ValidationError(f"Composition of {self.target} has a zero part",
                                  invariant="every part is nonzero")
        total = MultiIndex.zero(self.target.dimension)
        for part in parts:
            total = total + part
        if total != self.target:
            raise ValidationError(f"Composition parts sum to {total}, not {self.target}",
                                  invariant="parts sum to alpha")
        object.__setattr__(self, 'parts', parts)

    @property
    def length(self) -> int:
        return len(self.parts)


def compositions(alpha: MultiIndex, parts: int) -> List[Composition]:
    """All ordered `parts`-tuples of nonzero multi-indices summing to alpha"""
    if not 1 <= parts <= alpha.degree:
        raise InvalidPartCount(f"Part count {parts} outside 1..{alpha.degree} for {alpha}")
    return [Composition(c, alpha) for c in _compositions(alpha, parts)]


def composition_parts(alpha: MultiIndex, parts: int) -> Tuple[Tuple[MultiIndex, ...], ...]:
    """Cached raw tuples behind compositions(); no range check"""
    return _compositions(alpha, parts)


def all_compositions(alpha: MultiIndex) -> List[Composition]:
    return [c for r in range(1, alpha.degree + 1) for c in compositions(alpha, r)]


def splittings(alpha: MultiIndex) -> Iterator[Tuple[MultiIndex, MultiIndex]]:
    """All (delta_1, delta_2) with delta_1 + delta_2 = alpha"""
    for exponents in itertools.product(*(range(a + 1) for a in alpha.exponents)):
        delta = MultiIndex(exponents)
        yield delta, alpha - delta


def as_multi_index(value: Sequence[int]) -> MultiIndex:
    return value if isinstance(value, MultiIndex) else MultiIndex(tuple(value))
