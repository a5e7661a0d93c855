#!/usr/bin/env python3
"""
Sample grids for the criteria

The default grid is a fixed list of Gaussian rationals with modulus <= 1/2 so
that reports are reproducible. The dense grid is a polar sweep at low radius,
rationalized in exact mode.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from ..series.scalars import GaussianRational, normalize

DEFAULT_VALUES = (
    Fraction(0),
    Fraction(3, 10),
    Fraction(-3, 10),
    Fraction(2, 5),
    Fraction(-2, 5),
    GaussianRational(Fraction(1, 4), Fraction(1, 4)),
    GaussianRational(Fraction(1, 4), Fraction(-1, 4)),
    GaussianRational(Fraction(-1, 4), Fraction(1, 4)),
    GaussianRational(Fraction(0), Fraction(3, 10)),
    Fraction(1, 2),
)

DENSE_RADII = 10
DENSE_ANGLES = 10
DENSE_MAX_RADIUS = 0.3
DENSE_DENOMINATOR = 1000


def _spread(values: Sequence, dimension: int) -> List[Tuple]:
    """(c, 0, ..., 0) and (c/d, ..., c/d) for every value c, duplicates dropped"""
    points: List[Tuple] = []
    for c in values:
        candidates = [(c,) + (Fraction(0),) * (dimension - 1)]
        if dimension > 1:
            candidates.append(tuple(normalize(c / dimension) for _ in range(dimension)))
        for point in candidates:
            if point not in points:
                points.append(point)
    return points


def default_samples(dimension: int = 1, mode: str = 'exact') -> List[Tuple]:
    points = _spread(DEFAULT_VALUES, dimension)
    return points if mode == 'exact' else [as_float_point(p) for p in points]


def _alternate(values: Sequence, dimension: int) -> List[Tuple]:
    """One point per value: (c, 0, ..., 0) at even positions, (c/d, ..., c/d) at odd ones"""
    points: List[Tuple] = []
    for position, c in enumerate(values):
        if dimension > 1 and position % 2:
            points.append(tuple(normalize(c / dimension) for _ in range(dimension)))
        else:
            points.append((c,) + (Fraction(0),) * (dimension - 1))
    return points


def dense_samples(dimension: int = 1, mode: str = 'exact') -> List[Tuple]:
    """100-point polar sweep with radius <= 0.3, in every dimension"""
    radii = np.linspace(DENSE_MAX_RADIUS / DENSE_RADII, DENSE_MAX_RADIUS, DENSE_RADII)
    angles = np.linspace(0.0, 2.0 * np.pi, DENSE_ANGLES, endpoint=False)
    grid = (radii[:, None] * np.exp(1j * angles[None, :])).ravel()
    if mode == 'exact':
        values = [rationalize(complex(z)) for z in grid]
    else:
        values = [complex(z) for z in grid]
    return _alternate(values, dimension)


def rationalize(value: complex, max_denominator: int = DENSE_DENOMINATOR):
    real = Fraction(value.real).limit_denominator(max_denominator)
    imag = Fraction(value.imag).limit_denominator(max_denominator)
    return normalize(GaussianRational(real, imag))


def as_float_point(point: Sequence) -> Tuple:
    return tuple(complex(x) for x in point)


def tensor_pairs(points: Sequence[Tuple]) -> List[Tuple[Tuple, Tuple]]:
    """(y, t) pairs: each point with its successor in the list"""
    n = len(points)
    return [(points[i], points[(i + 1) % n]) for i in range(n)]
