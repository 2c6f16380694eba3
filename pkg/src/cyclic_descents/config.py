"""
Configuration

Built-in defaults, overridden by environment variables (a local .env file is
honoured), overridden in turn by command-line flags.
"""

import os
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from dotenv import load_dotenv

from .errors import ConfigError
from .perm_core import Composition

load_dotenv()

VERSION = "1.0.0"

DEFAULT_CACHE_DIR = ".cache/cyclic_descents"
DEFAULT_JOBS = 1
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_N_MAX = 7

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


class OutputFormat(str, Enum):
    """Output formats accepted by --format"""
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


class EnumerationSet(str, Enum):
    """Sets accepted by enumerate --set"""
    CYCLIC = "cyclic"
    NECKLACE = "necklace"
    UNIMODAL = "unimodal"


def env_cache_dir() -> str:
    return os.getenv("CYCLIC_DESCENTS_CACHE_DIR") or DEFAULT_CACHE_DIR


def env_jobs() -> int:
    raw = os.getenv("CYCLIC_DESCENTS_JOBS")
    if not raw:
        return DEFAULT_JOBS
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigError(f"CYCLIC_DESCENTS_JOBS must be an integer, got {raw!r}") from e


def env_log_level() -> str:
    level = (os.getenv("CYCLIC_DESCENTS_LOG_LEVEL") or DEFAULT_LOG_LEVEL).upper()
    if level not in LOG_LEVELS:
        raise ConfigError(f"CYCLIC_DESCENTS_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {level!r}")
    return level


@dataclass
class CliConfig:
    """
    Validated settings for one command-line invocation.

    Attributes:
        command: Subcommand name ('enumerate', 'ppat', 'char', 'verify')
        lam: Composition from --lambda
        n: Size from --n
        m: Filter from --m
        output_format: table, json or csv
        enumeration_set: cyclic, necklace or unimodal (enumerate only)
        out: Output path, None for stdout
        cache_dir: Report cache directory, None disables caching
        jobs: Worker processes for the verification suite
        n_max: Largest n the suite visits
    """

    command: str
    lam: Optional[Composition] = None
    n: Optional[int] = None
    m: Optional[int] = None
    output_format: OutputFormat = OutputFormat.TABLE
    enumeration_set: EnumerationSet = EnumerationSet.CYCLIC
    out: Optional[str] = None
    cache_dir: Optional[str] = None
    jobs: int = DEFAULT_JOBS
    n_max: int = DEFAULT_N_MAX

    def __post_init__(self):
        if self.command not in ("enumerate", "ppat", "char", "verify"):
            raise ConfigError(f"unknown subcommand {self.command!r}")
        try:
            self.output_format = OutputFormat(self.output_format)
            self.enumeration_set = EnumerationSet(self.enumeration_set)
        except ValueError as e:
            raise ConfigError(str(e)) from e
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")
        if self.n_max < 1:
            raise ConfigError(f"n-max must be >= 1, got {self.n_max}")
        if self.n is not None and self.n < 1:
            raise ConfigError(f"n must be >= 1, got {self.n}")
        if self.m is not None:
            if self.m < 0:
                raise ConfigError(f"m must be >= 0, got {self.m}")
            if self.lam is not None and self.m > self.lam.n:
                raise ConfigError(f"m must lie in [0, {self.lam.n}], got {self.m}")

    @classmethod
    def from_env(cls, command: str, **flags) -> 'CliConfig':
        """
        Build a config from flags. For verify, unset jobs and cache_dir come from the environment;
        other commands never read them.

        Args:
            command: Subcommand name
            **flags: Field values; None means "not given on the command line"

        Returns:
            CliConfig instance
        """
        given = {k: v for k, v in flags.items() if v is not None}
        if command == "verify":
            if "jobs" not in given:
                given["jobs"] = env_jobs()
            if "cache_dir" not in given:
                given["cache_dir"] = env_cache_dir()
        return cls(command=command, **given)
