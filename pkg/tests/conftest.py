"""Shared fixtures for the test suite."""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from src.cli_report import SweepConfig, load_config  # noqa: E402

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture
def default_config():
    """Built-in defaults, independent of config/config.yml."""
    return load_config(None)


@pytest.fixture
def sweep_config(tmp_path):
    """Factory for small sweeps writing under tmp_path."""

    def make(**overrides) -> SweepConfig:
        fmt = overrides.get('fmt', 'csv')
        overrides.setdefault('out_path', tmp_path / f"sweep.{fmt}")
        overrides.setdefault('progress', False)
        return SweepConfig(**overrides)

    return make


@pytest.fixture
def isolated_config(tmp_path):
    """Config file pointing results under tmp_path, for CLI runs."""
    path = tmp_path / "config.yml"
    path.write_text(
        "output:\n"
        f"  results_dir: \"{tmp_path / 'results'}\"\n"
        "logging:\n"
        "  progress: false\n"
    )
    return path


def small_grid(n_max: int):
    """Every (n, m) with 1 <= n <= n_max."""
    return [(n, m) for n in range(1, n_max + 1) for m in range(n * (n - 1) // 2 + 1)]
