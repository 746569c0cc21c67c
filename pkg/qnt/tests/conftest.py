"""
Pytest configuration and shared fixtures
"""

import json
from typing import Callable

import numpy as np
import pytest
from click.testing import CliRunner

from app.main import run
from app.services.integer_rep import build_Z


@pytest.fixture
def runner() -> CliRunner:
    """Click test runner for the command group"""
    return CliRunner()


@pytest.fixture
def invoke(capsys) -> Callable[..., tuple[int, str, str]]:
    """Run the CLI entry point; returns (exit code, stdout, stderr)"""

    def _invoke(*args: str) -> tuple[int, str, str]:
        code = run(list(args))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _invoke


@pytest.fixture
def qutrit_z():
    """Z1, Z2, Z3 at d = 3"""
    return tuple(build_Z(p, 3) for p in (1, 2, 3))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def entropy_spec_file(tmp_path):
    """Two factors: a maximally mixed qu2it and a pure complex qutrit"""
    spec = {
        "factors": [
            {"members": [[1, 0], [0, 1]], "weights": [0.5, 0.5]},
            {
                "members": [[[0.6, 0], [0, 0.8], 0]],
                "weights": [1.0],
                "normalize": False,
            },
        ]
    }
    path = tmp_path / "density.json"
    path.write_text(json.dumps(spec), encoding="utf-8")
    return path
