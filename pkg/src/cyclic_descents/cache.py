"""
Content-hash cache for verification reports
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from .report import VerificationReport

logger = logging.getLogger(__name__)


class ReportCache:
    """
    Stores one report per (identity, params, version) as <sha256>.json.

    Bumping the version makes every earlier entry unreachable.
    """

    def __init__(self, directory: str, version: str):
        """
        Initialize the cache.

        Args:
            directory: Cache directory, created on first write
            version: Artifact version folded into every key
        """
        self.directory = Path(directory)
        self.version = version

    def key(self, identity: str, params: Dict[str, Any]) -> str:
        canonical = json.dumps(
            {'identity': identity, 'params': params, 'version': self.version},
            sort_keys=True,
            separators=(',', ':'),
        )
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()

    def path(self, identity: str, params: Dict[str, Any]) -> Path:
        return self.directory / f"{self.key(identity, params)}.json"

    def get(self, identity: str, params: Dict[str, Any]) -> Optional[VerificationReport]:
        """
        Look up a stored report.

        Returns:
            The stored report, or None on a miss or an unreadable entry
        """
        path = self.path(identity, params)
        if not path.exists():
            logger.debug("cache miss: %s %s", identity, params)
            return None
        try:
            report = VerificationReport.from_dict(json.loads(path.read_text(encoding='utf-8')))
        except (OSError, ValueError, KeyError) as e:
            logger.warning("ignoring unreadable cache entry %s: %s", path, e)
            return None
        logger.debug("cache hit: %s %s", identity, params)
        return report

    def put(self, report: VerificationReport):
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path(report.identity, report.params)
        path.write_text(json.dumps(report.to_dict(include_timing=True), ensure_ascii=False), encoding='utf-8')
