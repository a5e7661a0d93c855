#!/usr/bin/env python3
"""
Job configuration

A job file is a JSON document validated by the pydantic models below. Names
used by checks must resolve to declared kernels or functionals; expressions
are parsed once the effective truncation degree is known.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import ConfigError
from ..functionals.functional import Functional, TensorFunctional
from ..kernels.kernel import Kernel, TensorKernel
from ..utils.logger import get_logger
from ..verify.reports import TAIL_ESTIMATE_METHOD
from ..verify.samples import as_float_point, default_samples, dense_samples
from .expressions import parse_functional_expr, parse_kernel_expr, parse_value

logger = get_logger(__name__)

CONFIG_VERSION = 1

CheckKind = Literal['cnp', 'power', 'schur', 'tensor', 'brute_force', 'identity',
                    'equivalence', 'norm', 'membership', 'composed']

# Subcommand -> check kinds it runs when the job declares checks
SUBCOMMAND_KINDS = {
    'cnp': ('cnp',),
    'verify': ('power', 'schur', 'tensor', 'composed'),
    'norm': ('norm', 'membership'),
    'identity': ('identity', 'brute_force'),
    'report': None,
}

RawScalar = Union[str, int, float, List[Union[str, int, float]]]


class CheckSpec(BaseModel):
    """One requested check"""
    model_config = ConfigDict(extra='forbid')

    kind: CheckKind
    kernel: Optional[str] = None
    kernels: Optional[List[str]] = None
    functional: Optional[str] = None
    p: int = Field(1, ge=1)
    m: int = Field(1, ge=1)
    max_degree: Optional[int] = Field(None, ge=0)
    point: Optional[List[RawScalar]] = None
    lam: RawScalar = '0'
    symbols: Optional[List[RawScalar]] = None

    @model_validator(mode='after')
    def check_arity(self) -> 'CheckSpec':
        if self.kernels is not None and len(self.kernels) != 2:
            raise ValueError(f"{self.kind} check takes exactly two kernels in 'kernels'")
        if self.kind in ('schur', 'tensor'):
            if not self.kernels:
                raise ValueError(f"{self.kind} check needs exactly two kernels")
        elif self.kind == 'identity':
            if not (self.kernel or self.kernels):
                raise ValueError("identity check needs a kernel, or two kernels for the Schur/tensor forms")
        elif self.kind in ('cnp', 'power', 'equivalence', 'norm', 'membership'):
            if not self.kernel:
                raise ValueError(f"{self.kind} check needs a kernel")
        if self.kind in ('power', 'schur', 'tensor', 'brute_force', 'identity', 'equivalence', 'norm'):
            if not self.functional:
                raise ValueError(f"{self.kind} check needs a functional")
        if self.kind == 'membership' and self.point is None:
            raise ValueError("membership check needs a point")
        if self.kind == 'composed' and not self.symbols:
            raise ValueError("composed check needs symbol values")
        return self

    def kernel_names(self) -> List[str]:
        return list(self.kernels or ([self.kernel] if self.kernel else []))


class JobConfig(BaseModel):
    """A job file"""
    model_config = ConfigDict(extra='forbid')

    version: int = CONFIG_VERSION
    degree: Optional[int] = Field(None, ge=1)
    tolerance: Optional[float] = Field(None, gt=0)
    mode: Optional[Literal['exact', 'float']] = None
    kernels: Dict[str, str] = Field(default_factory=dict)
    functionals: Dict[str, str] = Field(default_factory=dict)
    samples: Optional[List[List[RawScalar]]] = None
    dense: bool = False
    checks: List[CheckSpec] = Field(default_factory=list)

    @model_validator(mode='after')
    def check_references(self) -> 'JobConfig':
        if self.version != CONFIG_VERSION:
            raise ValueError(f"Unsupported config version {self.version}")
        for check in self.checks:
            for name in check.kernel_names():
                if name not in self.kernels:
                    raise ValueError(f"Check {check.kind} references unknown kernel '{name}'")
            if check.functional and check.functional not in self.functionals:
                raise ValueError(f"Check {check.kind} references unknown functional '{check.functional}'")
        return self

    def echo(self) -> Dict[str, Any]:
        return self.model_dump(mode='json', exclude_none=True)


def load_job(path: Union[str, Path]) -> JobConfig:
    """Read and validate a job file; raises OSError, JSONDecodeError or pydantic.ValidationError"""
    with open(path, 'r', encoding='utf-8') as handle:
        data = json.load(handle)
    return JobConfig.model_validate(data)


@dataclass
class PreparedJob:
    """A job with every expression parsed at the effective settings"""
    config: JobConfig
    degree: int
    tolerance: float
    mode: str
    dense: bool
    rho_max: float
    divergence_ratio: float
    kernels: Dict[str, Union[Kernel, TensorKernel]] = field(default_factory=dict)
    functionals: Dict[str, Union[Functional, TensorFunctional]] = field(default_factory=dict)
    checks: List[CheckSpec] = field(default_factory=list)
    explicit_samples: Optional[List[tuple]] = None

    def samples(self, dimension: int) -> List[tuple]:
        """Sample points for a ball of the given dimension"""
        if self.explicit_samples is not None:
            points = [p for p in self.explicit_samples if len(p) == dimension]
        elif self.dense:
            points = dense_samples(dimension, self.mode)
        else:
            points = default_samples(dimension, self.mode)
        return points

    def point(self, raw: Sequence) -> tuple:
        point = tuple(parse_value(x) for x in raw)
        return as_float_point(point) if self.mode == 'float' else point

    def settings(self) -> Dict[str, Any]:
        return {
            'degree': self.degree,
            'mode': self.mode,
            'tolerance': repr(float(self.tolerance)),
            'tail_estimate_method': TAIL_ESTIMATE_METHOD,
            'dense': self.dense,
        }


def _synthesize_checks(config: JobConfig, subcommand: str,
                       kernels: Dict[str, Any], functionals: Dict[str, Any]) -> List[CheckSpec]:
    """Checks implied by a subcommand when the job declares none for it"""
    if subcommand == 'cnp':
        return [CheckSpec(kind='cnp', kernel=name) for name, k in kernels.items() if isinstance(k, Kernel)]
    if subcommand == 'norm':
        return [CheckSpec(kind='norm', kernel=kname, functional=fname)
                for kname, k in kernels.items() if isinstance(k, Kernel)
                for fname, f in functionals.items()
                if isinstance(f, Functional) and f.dimension == k.dimension]
    return []


def prepare_job(config: JobConfig, settings: Dict[str, Any], cli_overrides: Optional[Dict[str, Any]] = None,
                subcommand: str = 'report', base_dir: Optional[Path] = None) -> PreparedJob:
    """
    Resolve effective settings (command line > job file > environment/defaults),
    parse every expression and select the checks for the subcommand.
    """
    cli_overrides = {k: v for k, v in (cli_overrides or {}).items() if v is not None}

    def effective(key: str, job_value):
        if key in cli_overrides:
            return cli_overrides[key]
        return job_value if job_value is not None else settings[key]

    degree = effective('degree', config.degree)
    tolerance = effective('tolerance', config.tolerance)
    mode = effective('mode', config.mode)
    dense = bool(cli_overrides.get('dense', False) or config.dense)

    kernels = {name: parse_kernel_expr(text, degree) for name, text in config.kernels.items()}
    functionals = {}
    for name, text in config.functionals.items():
        functional = parse_functional_expr(text, degree, base_dir)
        functionals[name] = functional.to_float() if mode == 'float' else functional

    wanted = SUBCOMMAND_KINDS.get(subcommand)
    if subcommand not in SUBCOMMAND_KINDS:
        raise ConfigError(f"Unknown subcommand '{subcommand}'")
    checks = [c for c in config.checks if wanted is None or c.kind in wanted]
    if not checks:
        checks = _synthesize_checks(config, subcommand, kernels, functionals)
    if not checks:
        raise ConfigError(f"Job declares no checks for subcommand '{subcommand}'")

    for check in checks:
        max_degree = check.max_degree if check.max_degree is not None else default_max_degree(degree)
        if check.kind in ('brute_force', 'equivalence') and 2 * max_degree > degree:
            raise ConfigError(f"{check.kind} check to degree {max_degree} needs truncation N >= {2 * max_degree}, "
                              f"got {degree}")
        if check.kind == 'identity' and max_degree > degree:
            raise ConfigError(f"identity check to degree {max_degree} exceeds truncation N = {degree}")

    job = PreparedJob(
        config=config, degree=degree, tolerance=tolerance, mode=mode, dense=dense,
        rho_max=settings['rho_max'], divergence_ratio=settings['divergence_ratio'],
        kernels=kernels, functionals=functionals, checks=checks,
    )
    if config.samples is not None:
        job.explicit_samples = [job.point(raw) for raw in config.samples]
    logger.info("Job prepared", subcommand=subcommand, degree=degree, mode=mode,
                checks=len(checks), kernels=len(kernels), functionals=len(functionals))
    return job


def default_max_degree(degree: int) -> int:
    return min(4, degree // 2)
