"""
Verification reports

A VerificationReport pairs a closed-form side with an independently enumerated side
of one identity at one parameter point. Reports serialize to JSON lines with every
integer written as a decimal string.
"""

import json
import re
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List

_INTEGER = re.compile(r'^-?\d+$')


def encode_value(value: Any) -> Any:
    """Integers become decimal strings; maps and lists are encoded element-wise"""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [str(v) for v in value]
    return value


def decode_value(value: Any) -> Any:
    """Inverse of encode_value (list elements are kept as text)"""
    if isinstance(value, dict):
        return {k: decode_value(v) for k, v in value.items()}
    if isinstance(value, list):
        return list(value)
    if isinstance(value, str) and _INTEGER.match(value):
        return int(value)
    return value


@dataclass
class VerificationReport:
    """
    Outcome of one identity check.

    Attributes:
        identity: Identity name (e.g. 'main', 'elizalde')
        params: JSON-ready parameters ({'lambda': '2,3'} or {'n': 5})
        lhs: Exact value or histogram from one side
        rhs: Exact value or histogram from the other side
        enumerated_count: Number of objects enumerated to produce the report
        elapsed: Wall time in seconds
    """

    identity: str
    params: Dict[str, Any]
    lhs: Any
    rhs: Any
    enumerated_count: int = 0
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def milliseconds(self) -> int:
        return int(round(self.elapsed * 1000))

    def mismatches(self) -> List[str]:
        """Keys where two histogram sides disagree (empty for scalar reports)"""
        if not isinstance(self.lhs, dict) or not isinstance(self.rhs, dict):
            return []
        keys = sorted(set(self.lhs) | set(self.rhs))
        return [k for k in keys if self.lhs.get(k) != self.rhs.get(k)]

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        data = {
            'identity': self.identity,
            'params': dict(self.params),
            'lhs': encode_value(self.lhs),
            'rhs': encode_value(self.rhs),
            'pass': self.passed,
            'count': self.enumerated_count,
        }
        if include_timing:
            data['ms'] = self.milliseconds
        return data

    def to_json_line(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerificationReport':
        """
        Rebuild a report from its serialized form.

        Args:
            data: Dictionary produced by to_dict

        Returns:
            VerificationReport whose pass flag is recomputed from lhs/rhs
        """
        return cls(
            identity=data['identity'],
            params=dict(data.get('params', {})),
            lhs=decode_value(data['lhs']),
            rhs=decode_value(data['rhs']),
            enumerated_count=int(data.get('count', 0)),
            elapsed=int(data.get('ms', 0)) / 1000,
        )

    @classmethod
    def from_json_line(cls, line: str) -> 'VerificationReport':
        return cls.from_dict(json.loads(line))


def format_params(params: Dict[str, Any]) -> str:
    return ' '.join(f"{k}={v}" for k, v in params.items())


def render_table(reports: Iterable[VerificationReport]) -> str:
    """
    Render reports as a fixed-width table followed by a summary line.

    Args:
        reports: Reports in suite order

    Returns:
        Multi-line string
    """
    rows = []
    for report in reports:
        if isinstance(report.lhs, dict):
            lhs = f"<{len(report.lhs)} keys>"
            rhs = f"<{len(report.rhs)} keys>" if isinstance(report.rhs, dict) else str(report.rhs)
        else:
            lhs, rhs = str(report.lhs), str(report.rhs)
        rows.append((
            report.identity,
            format_params(report.params),
            lhs,
            rhs,
            'PASS' if report.passed else 'FAIL',
            str(report.enumerated_count),
            str(report.milliseconds),
        ))

    header = ('identity', 'params', 'lhs', 'rhs', 'result', 'count', 'ms')
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]

    def line(cells) -> str:
        return '  '.join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()

    lines = [line(header), line(tuple('-' * w for w in widths))]
    lines.extend(line(row) for row in rows)

    failed = sum(1 for row in rows if row[4] == 'FAIL')
    if failed:
        lines.append(f"✗ {failed} of {len(rows)} checks failed")
    else:
        lines.append(f"✓ {len(rows)} checks passed")
    return '\n'.join(lines)
