"""
Configuration.

Loads config/config.yml over built-in defaults and defines SweepConfig, the
validated description of one verification sweep.
"""

import copy
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml

from ..bound_suite import CHECKS
from ..errors import ConfigError
from ..exact_core import binom2
from ..oracle import DEFAULT_CHUNK_SIZE, HARD_LIMIT

logger = logging.getLogger(__name__)

DEFAULT_CONFIG: Dict[str, Any] = {
    'oracle': {
        'cap': 7,
        'chunk_size': DEFAULT_CHUNK_SIZE,
        'jobs': 1,
    },
    'sweep': {
        'max_full_n': 300,
        'jobs': 1,
        'ratio_threshold': [106, 100],
    },
    'display': {
        'digits': 6,
    },
    'output': {
        'results_dir': 'results',
        'report_name': 'verification_report.txt',
    },
    'logging': {
        'level': 'INFO',
        'file': None,
        'progress': True,
    },
}

ORACLE_CHECK = 'oracle'
RATIO_CHECK = 'de_caen_ratio'

# column order of check results in sweep output
CHECK_ORDER: Tuple[str, ...] = (*CHECKS.keys(), ORACLE_CHECK, RATIO_CHECK)
# "all" covers every universal statement; the ratio claim is only asked for explicitly
ALL_CHECKS: Tuple[str, ...] = (*CHECKS.keys(), ORACLE_CHECK)

# short names accepted wherever checks are selected
CHECK_ALIASES: Dict[str, str] = {
    'bo1': 'radical_sandwich',
    'bo2': 'radical_below_de_caen',
    'bo3': 'sharp_sandwich',
    'bo4': 'sharp_below_de_caen',
    'p1': 'clique_lower',
    'pro1': 'clique_upper',
    'in5': 'star_upper',
    'pr0': 'root_gap',
    'sc': 'star_clique_identity',
    'complement': 'complement_identity',
    'ratio106': RATIO_CHECK,
}

FORMATS = ('csv', 'json')


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """Load the YAML config, falling back to defaults for anything missing.

    Args:
        path: Path to config.yml; None or a missing file gives the defaults

    Returns:
        Configuration dictionary
    """
    if path is None or not Path(path).exists():
        if path is not None:
            logger.debug(f"Config file {path} not found, using defaults")
        return copy.deepcopy(DEFAULT_CONFIG)

    with open(path, "r") as f:
        try:
            loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"config file {path} is not valid YAML: {e}") from e
    if not isinstance(loaded, dict):
        raise ConfigError(f"config file {path} must hold a mapping")
    return _merge(DEFAULT_CONFIG, loaded)


def parse_checks(selection: Union[str, List[str], Tuple[str, ...]]) -> Tuple[str, ...]:
    """Turn 'all' or a comma-separated list into check keys in output order."""
    if isinstance(selection, str):
        names = [name.strip() for name in selection.split(',') if name.strip()]
    else:
        names = list(selection)
    names = [CHECK_ALIASES.get(name, name) for name in names]
    if 'all' in names:
        names = [name for name in names if name != 'all'] + list(ALL_CHECKS)

    unknown = sorted(set(names) - set(CHECK_ORDER))
    if unknown:
        raise ConfigError(f"unknown checks: {', '.join(unknown)}; choose from {', '.join(CHECK_ORDER)} or 'all'")
    selected = set(names)
    return tuple(name for name in CHECK_ORDER if name in selected)


@dataclass
class SweepConfig:
    """One verification sweep over a grid of (n, m)."""

    n_min: int = 1
    n_max: int = 100
    m_policy: str = 'all'  # all | stride | list
    stride: int = 1
    m_values: Tuple[int, ...] = ()
    checks: Tuple[str, ...] = ALL_CHECKS
    out_path: Optional[Path] = None
    fmt: str = 'csv'
    jobs: int = 1
    oracle_cap: int = 7
    oracle_chunk_size: int = DEFAULT_CHUNK_SIZE
    ratio_threshold: Tuple[int, int] = (106, 100)
    include_ratio: bool = False
    digits: int = 6
    max_full_n: int = 300
    progress: bool = True

    def validate(self) -> None:
        if self.n_min < 1:
            raise ConfigError(f"n_min must be >= 1, got {self.n_min}")
        if self.n_min > self.n_max:
            raise ConfigError(f"n_min ({self.n_min}) must not exceed n_max ({self.n_max})")
        if not self.checks:
            raise ConfigError("at least one check must be selected")
        self.checks = parse_checks(self.checks)
        if self.fmt not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.m_policy not in ('all', 'stride', 'list'):
            raise ConfigError(f"unknown m policy {self.m_policy!r}")
        if self.m_policy == 'stride' and self.stride < 1:
            raise ConfigError(f"stride must be >= 1, got {self.stride}")
        if self.m_policy == 'list' and not self.m_values:
            raise ConfigError("explicit m list is empty")
        if self.m_policy == 'all' and self.n_max > self.max_full_n:
            raise ConfigError(
                f"n_max={self.n_max} exceeds {self.max_full_n}: pass --stride or --m to bound the sweep"
            )
        if not 0 <= self.oracle_cap <= HARD_LIMIT:
            raise ConfigError(f"oracle cap must lie in [0, {HARD_LIMIT}], got {self.oracle_cap}")
        if self.oracle_chunk_size < 1:
            raise ConfigError(f"oracle chunk size must be >= 1, got {self.oracle_chunk_size}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")
        if self.ratio_threshold[1] <= 0:
            raise ConfigError(f"ratio threshold denominator must be positive, got {self.ratio_threshold[1]}")

    def m_range(self, n: int) -> List[int]:
        """Edge counts visited at vertex count n."""
        full = binom2(n)
        if self.m_policy == 'stride':
            return list(range(0, full + 1, self.stride))
        if self.m_policy == 'list':
            return sorted({m for m in self.m_values if 0 <= m <= full})
        return list(range(full + 1))

    def resolved_out_path(self, results_dir: Union[str, Path]) -> Path:
        if self.out_path is not None:
            return Path(self.out_path)
        return Path(results_dir) / f"sweep.{self.fmt}"

    @property
    def wants_ratio(self) -> bool:
        return self.include_ratio or RATIO_CHECK in self.checks

    @classmethod
    def from_config(cls, config: Dict[str, Any], **overrides: Any) -> "SweepConfig":
        """Build from the loaded YAML config, then apply non-None overrides."""
        sweep = config['sweep']
        base = cls(
            jobs=sweep['jobs'],
            oracle_cap=config['oracle']['cap'],
            oracle_chunk_size=config['oracle']['chunk_size'],
            ratio_threshold=tuple(sweep['ratio_threshold']),
            digits=config['display']['digits'],
            max_full_n=sweep['max_full_n'],
            progress=config['logging']['progress'],
        )
        for key, value in overrides.items():
            if value is not None:
                setattr(base, key, value)
        return base
