#!/usr/bin/env python3
"""
rkhsmult Core Application Logic

Runs the checks of a prepared job and assembles the report document:
- kernel CNP transforms and their verdicts
- truncated functional norms and inverse-kernel membership evidence
- coefficient identity sweeps and brute-force multiplicativity
- kernel-side criteria (power, Schur product, tensor product)
"""

import asyncio
import time
from typing import Any, Callable, Dict, Optional, Tuple

from ..cli.job import CheckSpec, PreparedJob, default_max_degree
from ..cli.report import ReportDocument, ReportEntry
from ..errors import NotCnp, RkhsMultError, SeriesBoundViolated, UnresolvedCase, ValidationError
from ..functionals.action import functional_norm_sq_truncated, tensor_norm_sq_truncated
from ..functionals.functional import Functional, TensorFunctional
from ..kernels.cnp import cnp_transform
from ..kernels.kernel import Kernel, TensorKernel
from ..kernels.rkhs import inverse_power_membership_check
from ..utils.config import load_config
from ..utils.logger import get_logger, setup_logging
from ..verify.composed import check_composed_limit
from ..verify.criteria import CriterionManager
from ..verify.identities import identity_sweep, schur_identity_sweep, tensor_identity_sweep
from ..verify.oracles import brute_force_multiplicative, brute_force_multiplicative_tensor
from ..verify.reports import FAIL, INCONCLUSIVE, NOT_APPLICABLE, PASS, format_float, format_scalar
from ..verify.samples import tensor_pairs
from ..verify.suite import equivalence_suite

logger = get_logger(__name__)


class RkhsMultCore:
    """
    Core controller: dispatches each declared check and collects the entries
    """

    def __init__(self, config: Optional[Dict] = None):
        self.config = config or load_config()
        setup_logging(self.config)
        self.criteria = CriterionManager()
        self.stats = {
            'checks_run': 0,
            'checks_failed': 0,
            'criterion_samples': 0,
        }
        self._handlers: Dict[str, Callable[[PreparedJob, CheckSpec], Dict[str, Any]]] = {
            'cnp': self._run_cnp,
            'norm': self._run_norm,
            'membership': self._run_membership,
            'identity': self._run_identity,
            'brute_force': self._run_brute_force,
            'equivalence': self._run_equivalence,
            'composed': self._run_composed,
        }

    # Synchronous checks -------------------------------------------------------

    def _run_cnp(self, job: PreparedJob, check: CheckSpec) -> Dict[str, Any]:
        kernel = self._plain_kernel(job, check.kernel)
        result = cnp_transform(kernel).to_dict()
        result.update({'kind': 'cnp', 'kernel': kernel.label,
                       'verdict': PASS if result['is_cnp_up_to_N'] else FAIL})
        return result

    def _run_norm(self, job: PreparedJob, check: CheckSpec) -> Dict[str, Any]:
        functional = job.functionals[check.functional]
        kernel = job.kernels[check.kernel]
        if isinstance(functional, TensorFunctional):
            if not isinstance(kernel, TensorKernel):
                raise ValidationError("A tensor functional needs a tensor kernel for its norm",
                                      invariant="tensor functional paired with tensor kernel")
            norm_sq = tensor_norm_sq_truncated(functional, kernel)
        else:
            norm_sq = functional_norm_sq_truncated(functional, self._plain_kernel(job, check.kernel))
        within = float(norm_sq) <= 1 + job.tolerance
        return {
            'kind': 'norm',
            'functional': functional.label,
            'kernel': kernel.label,
            'degree': min(functional.degree, kernel.degree),
            'mode': functional.mode,
            'norm_sq': format_scalar(norm_sq),
            'norm_sq_float': format_float(float(norm_sq)),
            'within_unit_ball': within,
            'verdict': PASS if within else NOT_APPLICABLE,
        }

    def _run_membership(self, job: PreparedJob, check: CheckSpec) -> Dict[str, Any]:
        kernel = self._plain_kernel(job, check.kernel)
        report = inverse_power_membership_check(kernel, check.p, job.point(check.point), check.m,
                                                threshold=job.divergence_ratio)
        result = report.to_dict()
        result.update({'kind': 'membership', 'verdict': INCONCLUSIVE if report.diverging else PASS})
        return result

    def _run_identity(self, job: PreparedJob, check: CheckSpec) -> Dict[str, Any]:
        functional = job.functionals[check.functional]
        max_degree = self._max_degree(job, check)
        names = check.kernel_names()
        if isinstance(functional, TensorFunctional):
            if len(names) != 2:
                raise ValidationError("The tensor identity sweep needs two kernels",
                                      invariant="tensor functional paired with two kernels")
            k1, k2 = self._pair(job, names)
            return tensor_identity_sweep(functional, k1, k2, max_degree).to_dict()
        if len(names) == 2:
            k1, k2 = self._pair(job, names)
            return schur_identity_sweep(functional, k1, k2, max_degree).to_dict()
        kernel = self._plain_kernel(job, names[0])
        return identity_sweep(functional, kernel, check.p, max_degree).to_dict()

    def _run_brute_force(self, job: PreparedJob, check: CheckSpec) -> Dict[str, Any]:
        functional = job.functionals[check.functional]
        max_degree = self._max_degree(job, check)
        if isinstance(functional, TensorFunctional):
            return brute_force_multiplicative_tensor(functional, max_degree).to_dict()
        return brute_force_multiplicative(functional, max_degree).to_dict()

    def _run_equivalence(self, job: PreparedJob, check: CheckSpec) -> Dict[str, Any]:
        functional = self._plain_functional(job, check.functional)
        kernel = self._plain_kernel(job, check.kernel)
        report = equivalence_suite(functional, kernel, check.p, self._max_degree(job, check),
                                   job.samples(kernel.dimension), job.tolerance)
        return report.to_dict()

    def _run_composed(self, job: PreparedJob, check: CheckSpec) -> Dict[str, Any]:
        lam = job.point([check.lam])[0]
        symbols = job.point(check.symbols)
        try:
            return check_composed_limit(lam, symbols, job.degree, check.p, job.tolerance).to_dict()
        except UnresolvedCase as exc:
            return {'kind': 'composed', 'lam': format_scalar(lam), 'reason': str(exc),
                    'verdict': INCONCLUSIVE}

    # Criteria -----------------------------------------------------------------

    async def _run_criterion(self, job: PreparedJob, check: CheckSpec) -> Dict[str, Any]:
        functional = job.functionals[check.functional]
        names = check.kernel_names()
        if check.kind == 'power':
            kernel = self._plain_kernel(job, names[0])
            samples = [(w,) for w in job.samples(kernel.dimension)]
            kernels: Tuple = (kernel,)
            p = check.p
        else:
            kernels = self._pair(job, names)
            points = job.samples(kernels[0].dimension)
            samples = tensor_pairs(points) if check.kind == 'tensor' else [(w,) for w in points]
            p = None
        report = await self.criteria.check_async(check.kind, functional, kernels, samples, job.tolerance, p=p)
        self.stats['criterion_samples'] += len(samples)
        return report.to_dict()

    # Helpers ------------------------------------------------------------------

    @staticmethod
    def _plain_kernel(job: PreparedJob, name: str) -> Kernel:
        kernel = job.kernels[name]
        if not isinstance(kernel, Kernel):
            raise ValidationError(f"Kernel '{name}' is a tensor kernel; this check needs a kernel on one ball",
                                  invariant="plain kernel")
        return kernel

    @staticmethod
    def _plain_functional(job: PreparedJob, name: str) -> Functional:
        functional = job.functionals[name]
        if not isinstance(functional, Functional):
            raise ValidationError(f"Functional '{name}' is a tensor functional; this check needs a plain one",
                                  invariant="plain functional")
        return functional

    def _pair(self, job: PreparedJob, names) -> Tuple[Kernel, Kernel]:
        return self._plain_kernel(job, names[0]), self._plain_kernel(job, names[1])

    @staticmethod
    def _max_degree(job: PreparedJob, check: CheckSpec) -> int:
        return check.max_degree if check.max_degree is not None else default_max_degree(job.degree)

    async def _entry(self, index: int, job: PreparedJob, check: CheckSpec) -> ReportEntry:
        started = time.perf_counter()
        try:
            if check.kind in self.criteria.get_available_kinds():
                result = await self._run_criterion(job, check)
            else:
                result = await asyncio.to_thread(self._handlers[check.kind], job, check)
        except (NotCnp, SeriesBoundViolated) as exc:
            # A well-formed check whose hypotheses fail on this kernel
            logger.warning("Check failed on its hypotheses", index=index, kind=check.kind, error=str(exc))
            result = {'kind': check.kind, 'verdict': FAIL, 'error': str(exc),
                      'error_type': exc.__class__.__name__}
            if isinstance(exc, NotCnp) and exc.first_negative_index is not None:
                result['first_negative_index'] = exc.first_negative_index
        entry = ReportEntry(index=index, kind=check.kind, verdict=result['verdict'], result=result,
                            elapsed=time.perf_counter() - started)
        logger.info("Check completed", index=index, kind=check.kind, verdict=entry.verdict)
        return entry

    async def run(self, job: PreparedJob, subcommand: str = 'report') -> ReportDocument:
        """Run every check of the job; entries keep the declared order"""
        started = time.perf_counter()
        logger.info("Running job", subcommand=subcommand, checks=len(job.checks))
        try:
            entries = await asyncio.gather(*(self._entry(i, job, c) for i, c in enumerate(job.checks)))
        except RkhsMultError:
            logger.error("Job aborted", subcommand=subcommand)
            raise

        self.stats['checks_run'] += len(entries)
        self.stats['checks_failed'] += sum(1 for e in entries if e.verdict == FAIL)
        document = ReportDocument(
            subcommand=subcommand,
            config=job.config.echo(),
            settings=job.settings(),
            entries=list(entries),
            include_timing=bool(self.config.get('report_timing')),
            total_elapsed=time.perf_counter() - started,
        )
        logger.info("Job completed", subcommand=subcommand, verdict=document.summary_verdict, **self.stats)
        return document

    def get_stats(self) -> Dict[str, int]:
        return dict(self.stats)
