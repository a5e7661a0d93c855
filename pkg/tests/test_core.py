#!/usr/bin/env python3
"""
Tests for the core check runner
"""

import pytest

from rkhsmult.cli.job import JobConfig, prepare_job
from rkhsmult.core import RkhsMultCore
from rkhsmult.errors import ValidationError

JOB = {
    'version': 1,
    'degree': 8,
    'kernels': {'szego': 'szego', 'dirichlet': 'dirichlet', 'polydisc': 'tensor(szego, szego)'},
    'functionals': {'origin': 'point([0])', 'lam': 'counterexample', 'pair': 'tensor_point([0], [0])'},
}


def prepared(settings, checks, subcommand='report'):
    return prepare_job(JobConfig.model_validate({**JOB, 'checks': checks}), settings, subcommand=subcommand)


class TestRkhsMultCore:
    """Dispatch, ordering and statistics"""

    @pytest.mark.asyncio
    async def test_entries_keep_declared_order(self, settings):
        checks = [
            {'kind': 'power', 'kernel': 'szego', 'functional': 'lam'},
            {'kind': 'cnp', 'kernel': 'dirichlet'},
            {'kind': 'brute_force', 'functional': 'lam', 'max_degree': 2},
            {'kind': 'schur', 'kernels': ['szego', 'dirichlet'], 'functional': 'origin'},
        ]
        core = RkhsMultCore(settings)
        report = await core.run(prepared(settings, checks))
        assert [e.index for e in report.entries] == [0, 1, 2, 3]
        assert [e.kind for e in report.entries] == ['power', 'cnp', 'brute_force', 'schur']
        assert [e.verdict for e in report.entries] == ['fail', 'pass', 'fail', 'pass']
        assert report.summary_verdict == 'fail'
        assert report.exit_code == 1
        assert core.get_stats() == {'checks_run': 4, 'checks_failed': 2, 'criterion_samples': 20}

    @pytest.mark.asyncio
    async def test_norm_verdicts(self, settings):
        checks = [
            {'kind': 'norm', 'kernel': 'szego', 'functional': 'origin'},
            {'kind': 'norm', 'kernel': 'szego', 'functional': 'lam'},
            {'kind': 'norm', 'kernel': 'polydisc', 'functional': 'pair'},
        ]
        report = await RkhsMultCore(settings).run(prepared(settings, checks, 'norm'))
        origin, lam, pair = (e.result for e in report.entries)
        assert origin['norm_sq'] == '1'
        assert origin['verdict'] == 'pass'
        assert lam['norm_sq'] == '2'
        assert lam['verdict'] == 'not_applicable'
        assert pair['kernel'] == 'tensor(szego, szego)'
        assert pair['verdict'] == 'pass'
        assert report.summary_verdict == 'pass'

    @pytest.mark.asyncio
    async def test_membership(self, settings):
        checks = [{'kind': 'membership', 'kernel': 'szego', 'p': 1, 'm': 2, 'point': ['1/2']}]
        report = await RkhsMultCore(settings).run(prepared(settings, checks, 'norm'))
        result = report.entries[0].result
        assert result['kind'] == 'membership'
        assert result['norm_sq_full'] == '33/16'
        assert report.entries[0].verdict == 'pass'

    @pytest.mark.asyncio
    async def test_identity_forms(self, settings):
        checks = [
            {'kind': 'identity', 'kernel': 'szego', 'functional': 'lam', 'max_degree': 3},
            {'kind': 'identity', 'kernels': ['szego', 'dirichlet'], 'functional': 'origin', 'max_degree': 3},
            {'kind': 'identity', 'kernels': ['szego', 'szego'], 'functional': 'pair', 'max_degree': 3},
        ]
        report = await RkhsMultCore(settings).run(prepared(settings, checks, 'identity'))
        power, schur, tensor = (e.result for e in report.entries)
        assert power['identity_kind'] == 'power'
        assert power['first_failing_degree'] == 2
        assert schur['identity_kind'] == 'schur'
        assert schur['verdict'] == 'pass'
        assert tensor['identity_kind'] == 'tensor'
        assert tensor['verdict'] == 'pass'

    @pytest.mark.asyncio
    async def test_tensor_identity_needs_two_kernels(self, settings):
        checks = [{'kind': 'identity', 'kernel': 'szego', 'functional': 'pair', 'max_degree': 2}]
        with pytest.raises(ValidationError):
            await RkhsMultCore(settings).run(prepared(settings, checks, 'identity'))

    @pytest.mark.asyncio
    async def test_composed_limits(self, settings):
        checks = [
            {'kind': 'composed', 'lam': '0', 'symbols': ['1/4', '-1/3']},
            {'kind': 'composed', 'lam': '1/2', 'symbols': ['1/4']},
        ]
        report = await RkhsMultCore(settings).run(prepared(settings, checks, 'verify'))
        resolved, unresolved = report.entries
        assert resolved.result['functional'] == 'composed_limit(0)'
        assert resolved.verdict == 'pass'
        assert unresolved.verdict == 'inconclusive'
        assert unresolved.result['lam'] == '1/2'
        assert report.summary_verdict == 'pass'

    @pytest.mark.asyncio
    async def test_report_document(self, settings):
        checks = [{'kind': 'equivalence', 'kernel': 'szego', 'functional': 'lam', 'max_degree': 2}]
        report = await RkhsMultCore(settings).run(prepared(settings, checks))
        document = report.to_dict()
        assert document['tool'] == 'rkhsmult'
        assert document['subcommand'] == 'report'
        assert document['settings']['degree'] == 8
        assert 'timing' not in document
        assert len(report.residual_rows()) == 10
