"""Single-qubit Bloch-vector dynamics in both pictures of quantum mechanics."""

from .pauli import (
    pauli,
    identity2,
    bloch_from_angles,
    bloch_to_density,
    density_to_bloch,
    Unitary2,
    rotation,
    adjoint_of,
    compose,
)
from .engine import (
    Picture,
    QubitFrame,
    EvolutionTrace,
    ConsistencyReport,
    evolve_state,
    evolve_basis,
    expectation,
    evolve_frame,
    check_picture_consistency,
)
from .halting import (
    InputSelector,
    HaltingMachineState,
    SweepRecord,
    ConsistentReport,
    step_machine,
    divergence,
    run_contradiction_sweep,
    run_consistent_scenario,
)

__version__ = "0.1.0"
