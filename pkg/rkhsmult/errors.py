#!/usr/bin/env python3
"""
Exception hierarchy for rkhsmult

Every error raised by the library derives from RkhsMultError, which is a
ValueError so callers that only guard against bad values keep working.
"""

from typing import Optional


class RkhsMultError(ValueError):
    """Base class for all rkhsmult errors"""


class ZeroConstantTerm(RkhsMultError):
    """Series reciprocal requested for a series with a zero constant term"""


class InvalidPartCount(RkhsMultError):
    """Composition part count outside 1 <= r <= |alpha|"""


class DegreeOutOfRange(RkhsMultError):
    """A multi-index or request exceeds the truncation degree"""


class ZeroIndex(RkhsMultError):
    """The zero multi-index was passed where a nonzero one is required"""


class DimensionMismatch(RkhsMultError):
    """Objects living on balls of different dimension were combined"""


class OutsideBall(RkhsMultError):
    """A point does not lie in the open unit ball"""


class UnreliableTail(RkhsMultError):
    """The empirical ratio bound cannot certify a convergent tail"""


class NotCnp(RkhsMultError):
    """A negative b-coefficient was found where a CNP kernel is required"""

    def __init__(self, message: str, first_negative_index: Optional[int] = None):
        super().__init__(message)
        self.first_negative_index = first_negative_index


class SeriesBoundViolated(RkhsMultError):
    """The inner sum of the geometric series route has modulus >= 1"""


class NonRationalValues(RkhsMultError):
    """An exact computation was requested on floating point values"""


class UnresolvedCase(RkhsMultError):
    """The requested parameters fall outside the computable specialization"""


class ConfigError(RkhsMultError):
    """A job configuration references something that does not resolve"""


class ParseError(RkhsMultError):
    """Malformed kernel or functional expression"""

    def __init__(self, message: str, position: int = 0, text: str = ""):
        super().__init__(f"{message} at position {position}" + (f" in {text!r}" if text else ""))
        self.position = position
        self.text = text


class ValidationError(RkhsMultError):
    """A constructed object violates a named invariant"""

    def __init__(self, message: str, invariant: str):
        super().__init__(f"{message} (invariant: {invariant})")
        self.invariant = invariant
