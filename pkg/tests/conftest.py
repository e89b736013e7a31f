import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ppdim.exactlin import inverse, random_invertible  # noqa: E402
from ppdim.kmod import Invariants, ModuleRep, from_invariants  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: desk-scale oracle sweeps (deselect with -m 'not slow')")


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def module_of():
    """canonical module from a prime and block sizes"""

    def build(p, *parts):
        return from_invariants(Invariants(p, tuple(parts)))

    return build


@pytest.fixture
def conjugate():
    """same module written in a random basis"""

    def build(M, rng):
        if M.dim == 0:
            return M
        S = random_invertible(M.p, M.dim, rng)
        return ModuleRep(M.p, M.dim, S @ M.N @ inverse(S))

    return build
