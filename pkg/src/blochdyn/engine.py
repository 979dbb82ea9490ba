"""Dual-picture evolution of (state, basis) Bloch-vector pairs.

In the Schrodinger picture the state vector rotates and the observable's basis
vector stays put; in the Heisenberg picture the basis vector receives the
inverse rotation while the state stays put. Either way the expectation value
(the dot product of the two vectors) is unchanged.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .pauli import Unitary2, check_unit

__all__ = [
    "Picture",
    "QubitFrame",
    "EvolutionTrace",
    "ConsistencyReport",
    "evolve_state",
    "evolve_basis",
    "expectation",
    "evolve_frame",
    "check_picture_consistency",
]


class Picture(enum.Enum):
    SCHRODINGER = "schrodinger"
    HEISENBERG = "heisenberg"


@dataclass(frozen=True)
class QubitFrame:
    """A state vector paired with the basis vector it will be measured against."""

    state: np.ndarray
    basis: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "state", check_unit(self.state))
        object.__setattr__(self, "basis", check_unit(self.basis))

    def expectation(self):
        return expectation(self.basis, self.state)


def evolve_state(v, u: Unitary2):
    """Schrodinger step: rotate the state vector by the adjoint action of u."""
    v = check_unit(v)
    return u.adjoint_rotation @ v


def evolve_basis(e, u: Unitary2):
    """Heisenberg step: rotate the basis vector by the inverse adjoint action.

    Uses the transpose of the cached rotation, which is the exact inverse of
    the orthogonal matrix applied by evolve_state.
    """
    e = check_unit(e)
    return u.adjoint_rotation.T @ e


def expectation(e, v):
    """Expectation value of the observable e.sigma in the state v: the dot product."""
    e = check_unit(e)
    v = check_unit(v)
    return float(np.dot(e, v))


def evolve_frame(frame: QubitFrame, u: Unitary2, picture: Picture) -> QubitFrame:
    """Advance a frame by one unitary in the chosen picture."""
    if picture is Picture.SCHRODINGER:
        return QubitFrame(evolve_state(frame.state, u), frame.basis)
    if picture is Picture.HEISENBERG:
        return QubitFrame(frame.state, evolve_basis(frame.basis, u))
    raise ValueError(f"unknown picture {picture!r}")


@dataclass
class EvolutionTrace:
    """Ordered audit log of an evolution run."""

    steps: list = field(default_factory=list)

    def record(self, label: str, picture: Picture, frame: QubitFrame):
        self.steps.append((label, picture, frame.state.copy(), frame.basis.copy(),
                           frame.expectation()))


@dataclass(frozen=True)
class ConsistencyReport:
    schrodinger_expectation: float
    heisenberg_expectation: float
    consistent: bool

    @property
    def deviation(self):
        return abs(self.schrodinger_expectation - self.heisenberg_expectation)


def check_picture_consistency(frame: QubitFrame, gates, tol=1e-10) -> ConsistencyReport:
    """Run a gate sequence through both pictures and compare final expectations.

    The Heisenberg basis receives the gates' inverse rotations with the last
    gate acting first (e_final = R1^-1 R2^-1 ... Rn^-1 e), the ordering that
    mirrors a Schrodinger run of U1..Un. An empty gate list is allowed and
    trivially consistent.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    gates = list(gates)
    f_s = frame
    for u in gates:
        f_s = evolve_frame(f_s, u, Picture.SCHRODINGER)
    f_h = frame
    for u in reversed(gates):
        f_h = evolve_frame(f_h, u, Picture.HEISENBERG)
    exp_s = f_s.expectation()
    exp_h = f_h.expectation()
    return ConsistencyReport(exp_s, exp_h, abs(exp_s - exp_h) <= tol)
