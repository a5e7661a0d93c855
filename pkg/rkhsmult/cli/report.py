#!/usr/bin/env python3
"""
Report documents

The JSON rendering is deterministic: keys sorted, fixed indentation, no
timing unless requested. Exact-mode runs of the same job therefore produce
byte-identical files.
"""

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from .. import __version__
from ..verify.reports import FAIL, PASS

TOOL_NAME = 'rkhsmult'
REPORT_SCHEMA_VERSION = 1


@dataclass
class ReportEntry:
    """One executed check"""
    index: int
    kind: str
    verdict: str
    result: Dict[str, Any]
    elapsed: Optional[float] = None

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        data = {'index': self.index, 'check': self.kind, 'verdict': self.verdict, 'result': self.result}
        if include_timing and self.elapsed is not None:
            data['elapsed_seconds'] = round(self.elapsed, 6)
        return data


@dataclass
class ReportDocument:
    """Complete output of a job run"""
    subcommand: str
    config: Dict[str, Any]
    settings: Dict[str, Any]
    entries: List[ReportEntry] = field(default_factory=list)
    include_timing: bool = False
    total_elapsed: Optional[float] = None

    @property
    def summary_verdict(self) -> str:
        """pass unless some check failed; inconclusive and not_applicable entries do not fail a job"""
        return FAIL if any(e.verdict == FAIL for e in self.entries) else PASS

    @property
    def exit_code(self) -> int:
        return 0 if self.summary_verdict == PASS else 1

    def summary(self) -> Dict[str, Any]:
        counts: Dict[str, int] = {}
        for entry in self.entries:
            counts[entry.verdict] = counts.get(entry.verdict, 0) + 1
        return {'verdict': self.summary_verdict, 'checks': len(self.entries), 'verdicts': counts}

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'tool': TOOL_NAME,
            'version': __version__,
            'schema_version': REPORT_SCHEMA_VERSION,
            'subcommand': self.subcommand,
            'config': self.config,
            'settings': self.settings,
            'entries': [e.to_dict(self.include_timing) for e in self.entries],
            'summary': self.summary(),
        }
        if self.include_timing and self.total_elapsed is not None:
            data['timing'] = {'total_seconds': round(self.total_elapsed, 6)}
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + '\n'

    def write(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.to_json(), encoding='utf-8')

    def residual_rows(self) -> List[Dict[str, Any]]:
        """Flat per-sample rows from every criterion in the report"""
        rows = []
        for entry in self.entries:
            for criterion in _criteria_in(entry.result):
                for sample in criterion.get('samples', []):
                    rows.append({
                        'check_index': entry.index,
                        'criterion': criterion['criterion_kind'],
                        'functional': criterion['functional'],
                        'point': json.dumps(sample['point']),
                        'residual': json.dumps(sample['residual']),
                        'tail_estimate': sample['tail_estimate'],
                        'verdict': sample['verdict'],
                    })
        return rows

    def write_csv(self, path: Union[str, Path]) -> None:
        fields = ['check_index', 'criterion', 'functional', 'point', 'residual', 'tail_estimate', 'verdict']
        with open(path, 'w', newline='', encoding='utf-8') as handle:
            writer = csv.DictWriter(handle, fieldnames=fields)
            writer.writeheader()
            writer.writerows(self.residual_rows())


def _criteria_in(result: Dict[str, Any]) -> List[Dict[str, Any]]:
    if result.get('kind') == 'criterion':
        return [result]
    if result.get('kind') == 'equivalence':
        return [result['criterion']]
    return []
