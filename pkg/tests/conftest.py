"""Shared fixtures: the two-word, three-cause toy model and seeded generators."""

import os
import tempfile

# keep test runs out of the user's log directory
os.environ.setdefault("EXACTMIX_LOG_DIR", tempfile.mkdtemp(prefix="exactmix-logs-"))

import numpy as np
import pytest

from exactmix.model import Model, ObservationSeq, subdivide_cause

TOY_BETA = [[0.09, 0.05, 0.02], [0.02, 0.05, 0.08]]

# posterior means of the toy model given (w1, w2)
TOY_EXACT_THIRD = (0.3309, 0.3549, 0.3141)
TOY_EXACT_FLAT = (0.335786, 0.337124, 0.327090)
# the published flat-prior row truncates rather than rounds
TOY_EXACT_FLAT_TRUNCATED = (0.335, 0.337, 0.327)
TOY_SUBDIVIDED_EXACT = (0.1655, 0.1655, 0.3549, 0.3141)
TOY_PTILDE = 0.00463333


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point the config loader at a file that does not exist."""
    monkeypatch.setenv("EXACTMIX_CONFIG", str(tmp_path / "no_config.json"))
    monkeypatch.delenv("EXACTMIX_LOG_LEVEL", raising=False)


@pytest.fixture
def toy_model():
    return Model([1 / 3, 1 / 3, 1 / 3], TOY_BETA)


@pytest.fixture
def flat_toy_model():
    return Model([1.0, 1.0, 1.0], TOY_BETA)


@pytest.fixture
def subdivided_model(toy_model):
    return subdivide_cause(toy_model, 0)


@pytest.fixture
def toy_obs():
    return ObservationSeq((0, 1))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def relative_close(a: float, b: float, rel: float) -> bool:
    return abs(a - b) <= rel * max(abs(a), abs(b), 1e-300)
