import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from floqssh import DriveProtocol, ModelParams

# reference parameter set used by the bundled experiments
W, GAMMA, Q, T1, T2 = 1.0, 1.5, 2.0, 0.7, 0.7
PERIOD = T1 + T2

# representative drive amplitudes of the four phases: (f, |V1|, |V2|)
REGIMES = [
    (0.05, 0, 0),
    (0.5, 1, 0),
    (0.92, 1, 1),
    (1.0, 1, 2),
]


def reference_model(cells: int = 25, boundary: str = "open", v: float = 1.0) -> ModelParams:
    return ModelParams(W, GAMMA, v, cells, boundary)


def reference_drive(f: float) -> DriveProtocol:
    return DriveProtocol(f, Q, T1, T2)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_complex(rng, n, m=None, scale=1.0):
    m = n if m is None else m
    return scale * (rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m)))
