import math

import numpy as np
import pytest

from blochdyn import Unitary2, pauli


def random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_unitary(rng, with_phase=False):
    """Random axis-angle SU(2) element, optionally times a random global phase."""
    axis = random_unit(rng)
    angle = rng.uniform(0.0, 2.0 * math.pi)
    sig = axis[0] * pauli("x") + axis[1] * pauli("y") + axis[2] * pauli("z")
    m = math.cos(angle / 2) * np.eye(2) - 1j * math.sin(angle / 2) * sig
    if with_phase:
        m = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi)) * m
    return Unitary2(m)


@pytest.fixture
def rng():
    return np.random.default_rng(20240824)
