"""Halting-machine protocol: a y-axis rotation of a system qubit plus a
sigma_x flip of a halt qubit, executed in both dynamical pictures.

With the state vector as input the two pictures agree on every expectation
value. With the basis vector itself as input, the Schrodinger branch rotates
it forward (to (sin a, 0, cos a)) while the Heisenberg branch rotates it
backward (to (-sin a, 0, cos a)); the halt qubit flips in both branches, so
the machine claims completion for two different outputs whenever a is not a
multiple of pi.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from .engine import Picture, evolve_basis, evolve_state, expectation
from .pauli import Unitary2, check_unit, pauli, rotation

__all__ = [
    "InputSelector",
    "HaltingMachineState",
    "SweepRecord",
    "ConsistentReport",
    "step_machine",
    "divergence",
    "run_contradiction_sweep",
    "run_consistent_scenario",
]

_UP = np.array([0.0, 0.0, 1.0])

# Expectation threshold for declaring the halt-qubit flip complete.
HALT_TOL = 1e-9


class InputSelector(enum.Enum):
    STATE_INPUT = "state_input"
    BASIS_INPUT = "basis_input"


def _halt_flip() -> Unitary2:
    return Unitary2(pauli("x"))


@dataclass(frozen=True)
class HaltingMachineState:
    """System qubit, halt qubit, their observables, and the halt flag."""

    system: np.ndarray
    system_basis: np.ndarray
    halt: np.ndarray
    halt_basis: np.ndarray
    halted: bool = False

    def __post_init__(self):
        for name in ("system", "system_basis", "halt", "halt_basis"):
            object.__setattr__(self, name, check_unit(getattr(self, name), tol=1e-12))

    @classmethod
    def initial(cls):
        """All four vectors at (0, 0, 1), not yet halted."""
        return cls(_UP.copy(), _UP.copy(), _UP.copy(), _UP.copy())

    def is_initial(self):
        return (not self.halted
                and all(np.array_equal(getattr(self, n), _UP)
                        for n in ("system", "system_basis", "halt", "halt_basis")))


def step_machine(m: HaltingMachineState, alpha, picture: Picture,
                 selector: InputSelector) -> HaltingMachineState:
    """Run the machine's single step from its initial configuration.

    The system side is rotated by alpha about the y-axis; the halt qubit is
    flipped by sigma_x. Which vector carries the rotation depends on the
    picture and on whether the state or the basis vector is the input.
    """
    if not m.is_initial():
        raise ValueError("machine must be in the initial configuration")
    if not math.isfinite(alpha):
        raise ValueError(f"alpha must be finite, got {alpha}")
    u = rotation("y", alpha)
    flip = _halt_flip()

    if selector is InputSelector.STATE_INPUT:
        if picture is Picture.SCHRODINGER:
            m = replace(m, system=evolve_state(m.system, u),
                        halt=evolve_state(m.halt, flip))
        else:
            m = replace(m, system_basis=evolve_basis(m.system_basis, u),
                        halt_basis=evolve_basis(m.halt_basis, flip))
    elif selector is InputSelector.BASIS_INPUT:
        # The basis vector is the thing being evolved: forward rotation in the
        # Schrodinger picture, inverse rotation in the Heisenberg picture.
        if picture is Picture.SCHRODINGER:
            m = replace(m, system_basis=evolve_state(m.system_basis, u),
                        halt=evolve_state(m.halt, flip))
        else:
            m = replace(m, system_basis=evolve_basis(m.system_basis, u),
                        halt_basis=evolve_basis(m.halt_basis, flip))
    else:
        raise ValueError(f"unknown input selector {selector!r}")

    halted = abs(expectation(m.halt_basis, m.halt) + 1.0) <= HALT_TOL
    return replace(m, halted=halted)


def divergence(a, b):
    """Great-circle angle between two unit vectors, in [0, pi]."""
    a = check_unit(a)
    b = check_unit(b)
    return float(np.arccos(np.clip(np.dot(a, b), -1.0, 1.0)))


@dataclass(frozen=True)
class SweepRecord:
    """One alpha point of the basis-input contradiction experiment."""

    alpha: float
    schrodinger_output: np.ndarray
    heisenberg_output: np.ndarray
    divergence_angle: float
    halted_schrodinger: bool
    halted_heisenberg: bool


def run_contradiction_sweep(alphas):
    """Run the basis-input machine in both pictures for each alpha.

    Each alpha starts from a fresh initial machine. The halt qubit flips in
    both pictures at every alpha; the two output vectors disagree by an angle
    arccos(cos 2*alpha), zero only at multiples of pi.
    """
    records = []
    for alpha in alphas:
        m_s = step_machine(HaltingMachineState.initial(), alpha,
                           Picture.SCHRODINGER, InputSelector.BASIS_INPUT)
        m_h = step_machine(HaltingMachineState.initial(), alpha,
                           Picture.HEISENBERG, InputSelector.BASIS_INPUT)
        records.append(SweepRecord(
            alpha=float(alpha),
            schrodinger_output=m_s.system_basis,
            heisenberg_output=m_h.system_basis,
            divergence_angle=divergence(m_s.system_basis, m_h.system_basis),
            halted_schrodinger=m_s.halted,
            halted_heisenberg=m_h.halted,
        ))
    return records


@dataclass(frozen=True)
class ConsistentReport:
    schrodinger_expectation: float
    heisenberg_expectation: float
    both_halted: bool


def run_consistent_scenario(alpha) -> ConsistentReport:
    """Run the state-input machine in both pictures; expectations must agree."""
    m_s = step_machine(HaltingMachineState.initial(), alpha,
                       Picture.SCHRODINGER, InputSelector.STATE_INPUT)
    m_h = step_machine(HaltingMachineState.initial(), alpha,
                       Picture.HEISENBERG, InputSelector.STATE_INPUT)
    return ConsistentReport(
        schrodinger_expectation=expectation(m_s.system_basis, m_s.system),
        heisenberg_expectation=expectation(m_h.system_basis, m_h.system),
        both_halted=m_s.halted and m_h.halted,
    )
