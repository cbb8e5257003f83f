"""Shared fixtures: CLI runner and golden directory."""

import subprocess
import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture(scope="session")
def golden():
    return REPO_ROOT / "golden"


@pytest.fixture(scope="session")
def run_cli():
    """Run the installed CLI in a subprocess; returns (exit, stdout, stderr)."""

    def run(*args: str) -> tuple[int, str, str]:
        proc = subprocess.run(
            [sys.executable, "-m", "charpoly.cli", *args],
            capture_output=True,
            text=True,
        )
        return proc.returncode, proc.stdout, proc.stderr

    return run
