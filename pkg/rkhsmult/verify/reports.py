#!/usr/bin/env python3
"""
Report records produced by the verifiers

Every record is a dataclass with a to_dict() that renders scalars the same
way: rationals as "p/q" strings, complex values as [re, im] string pairs.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..series.multi_index import MultiIndex
from ..series.scalars import GaussianRational

PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'
NOT_APPLICABLE = 'not_applicable'
VERDICTS = (PASS, FAIL, INCONCLUSIVE, NOT_APPLICABLE)

TAIL_ESTIMATE_METHOD = (
    "empirical max coefficient ratio at rho = growth_radius(functional) * |w|_1, "
    "combined to first order (estimate)"
)


def format_scalar(value) -> Any:
    """JSON form of a scalar"""
    if isinstance(value, bool):
        return value
    if isinstance(value, GaussianRational):
        if value.imag == 0:
            return str(value.real)
        return [str(value.real), str(value.imag)]
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if isinstance(value, complex):
        if value.imag == 0:
            return format_float(value.real)
        return [format_float(value.real), format_float(value.imag)]
    return format_float(value)


def format_float(value: float) -> str:
    value = float(value)
    if math.isinf(value):
        return 'inf'
    if math.isnan(value):
        return 'nan'
    return repr(value)


def format_point(point: Sequence) -> List:
    return [format_scalar(x) for x in point]


def combine_verdicts(verdicts: Sequence[str]) -> str:
    """fail beats inconclusive beats not_applicable beats pass"""
    for verdict in (FAIL, INCONCLUSIVE, NOT_APPLICABLE):
        if verdict in verdicts:
            return verdict
    return PASS


@dataclass
class HypothesisFlags:
    """Norm-1 and Lambda(1) = 1 checks; truncated norms are lower bounds"""
    norm_sq: Any
    unit_value: Any
    tolerance: float

    @property
    def norm_ok(self) -> bool:
        return float(self.norm_sq) <= 1.0 + self.tolerance

    @property
    def unit_ok(self) -> bool:
        return abs(complex(self.unit_value) - 1) <= self.tolerance

    @property
    def clean(self) -> bool:
        return self.norm_ok and self.unit_ok

    def to_dict(self) -> Dict:
        return {
            'truncated_norm_sq': format_scalar(self.norm_sq),
            'norm_le_one_not_refuted': self.norm_ok,
            'unit_value': format_scalar(self.unit_value),
            'unit_value_is_one': self.unit_ok,
            'clean': self.clean,
        }


@dataclass
class SampleResidual:
    """Residual |inverse side * kernel side - 1| at one sample"""
    point: Tuple
    inverse_side: Any
    kernel_side: Any
    residual: Any
    tail_estimate: float
    tolerance: float

    @property
    def verdict(self) -> str:
        residual = float(self.residual)
        if residual <= self.tolerance:
            return PASS
        if residual <= self.tolerance + self.tail_estimate:
            return INCONCLUSIVE
        return FAIL

    def to_dict(self) -> Dict:
        return {
            'point': [format_point(part) for part in self.point],
            'inverse_side': format_scalar(self.inverse_side),
            'kernel_side': format_scalar(self.kernel_side),
            'residual': format_scalar(self.residual),
            'tail_estimate': format_float(self.tail_estimate),
            'verdict': self.verdict,
        }


@dataclass
class CriterionReport:
    """Outcome of a power, Schur or tensor criterion over a sample grid"""
    criterion_kind: str
    functional: str
    kernels: List[str]
    p: Optional[int]
    mode: str
    degree: int
    tolerance: float
    samples: List[SampleResidual]
    hypothesis_flags: HypothesisFlags

    @property
    def sample_points(self) -> List[Tuple]:
        return [s.point for s in self.samples]

    @property
    def residuals(self) -> List:
        return [s.residual for s in self.samples]

    @property
    def max_residual(self):
        return max(self.residuals, key=float) if self.samples else Fraction(0)

    @property
    def verdict(self) -> str:
        verdict = combine_verdicts([s.verdict for s in self.samples])
        if verdict == PASS and not self.hypothesis_flags.clean:
            return NOT_APPLICABLE
        return verdict

    def to_dict(self) -> Dict:
        return {
            'kind': 'criterion',
            'criterion_kind': self.criterion_kind,
            'functional': self.functional,
            'kernels': list(self.kernels),
            'p': self.p,
            'mode': self.mode,
            'degree': self.degree,
            'tolerance': format_float(self.tolerance),
            'samples': [s.to_dict() for s in self.samples],
            'max_residual': format_scalar(self.max_residual),
            'hypothesis_flags': self.hypothesis_flags.to_dict(),
            'verdict': self.verdict,
        }


@dataclass
class IdentityReport:
    """Exact comparison of one coefficient of the identity"""
    kind: str
    p: Optional[int]
    alpha: MultiIndex
    lhs: Any
    rhs: Any
    beta: Optional[MultiIndex] = None

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @property
    def degree(self) -> int:
        return self.alpha.degree + (self.beta.degree if self.beta is not None else 0)

    def to_dict(self) -> Dict:
        data = {
            'kind': self.kind,
            'p': self.p,
            'alpha': list(self.alpha.exponents),
            'lhs': format_scalar(self.lhs),
            'rhs': format_scalar(self.rhs),
            'equal': self.equal,
        }
        if self.beta is not None:
            data['beta'] = list(self.beta.exponents)
        return data


@dataclass
class IdentitySweepReport:
    """All identity coefficients up to a degree"""
    kind: str
    functional: str
    kernels: List[str]
    p: Optional[int]
    max_degree: int
    reports: List[IdentityReport] = field(default_factory=list)

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.reports)

    @property
    def first_failing_degree(self) -> Optional[int]:
        failing = [r.degree for r in self.reports if not r.equal]
        return min(failing) if failing else None

    @property
    def verdict(self) -> str:
        return PASS if self.all_equal else FAIL

    def to_dict(self) -> Dict:
        return {
            'kind': 'identity',
            'identity_kind': self.kind,
            'functional': self.functional,
            'kernels': list(self.kernels),
            'p': self.p,
            'max_degree': self.max_degree,
            'coefficients': [r.to_dict() for r in self.reports],
            'first_failing_degree': self.first_failing_degree,
            'verdict': self.verdict,
        }


@dataclass
class BruteForceReport:
    """Monomial multiplicativity Lambda(z^(alpha+beta)) = Lambda(z^alpha) Lambda(z^beta)"""
    functional: str
    max_degree: int
    mode: str
    checked_pairs: int
    witness: Optional[Tuple[MultiIndex, MultiIndex]] = None
    witness_values: Optional[Tuple[Any, Any]] = None
    power_form_holds: bool = True

    @property
    def passed(self) -> bool:
        return self.witness is None and self.power_form_holds

    @property
    def witness_degree(self) -> Optional[int]:
        if self.witness is None:
            return None
        alpha, beta = self.witness
        return alpha.degree + beta.degree

    @property
    def verdict(self) -> str:
        return PASS if self.passed else FAIL

    def to_dict(self) -> Dict:
        data = {
            'kind': 'brute_force',
            'functional': self.functional,
            'max_degree': self.max_degree,
            'mode': self.mode,
            'checked_pairs': self.checked_pairs,
            'power_form_holds': self.power_form_holds,
            'witness': None,
            'witness_degree': self.witness_degree,
            'verdict': self.verdict,
        }
        if self.witness is not None:
            alpha, beta = self.witness
            product, joint = self.witness_values
            data['witness'] = {
                'alpha': list(alpha.exponents),
                'beta': list(beta.exponents),
                'value_of_product': format_scalar(joint),
                'product_of_values': format_scalar(product),
            }
        return data


@dataclass
class EquivalenceReport:
    """Brute force, identity sweep and criterion run on the same functional"""
    brute_force: BruteForceReport
    identities: IdentitySweepReport
    criterion: CriterionReport
    caveats: List[str] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        multiplicative = self.brute_force.passed
        criterion_holds = self.criterion.verdict != FAIL
        return self.identities.all_equal == multiplicative and criterion_holds == multiplicative

    @property
    def verdict(self) -> str:
        return combine_verdicts([self.brute_force.verdict, self.identities.verdict, self.criterion.verdict])

    def to_dict(self) -> Dict:
        return {
            'kind': 'equivalence',
            'brute_force': self.brute_force.to_dict(),
            'identities': self.identities.to_dict(),
            'criterion': self.criterion.to_dict(),
            'agree': self.agree,
            'caveats': list(self.caveats),
            'verdict': self.verdict,
        }
