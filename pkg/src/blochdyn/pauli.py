"""Complex 2x2 Pauli algebra, Bloch vectors, and the SU(2) -> SO(3) adjoint map.

Conventions:
    sigma_x = [[0, 1], [1, 0]]
    sigma_y = [[0, -i], [i, 0]]
    sigma_z = [[1, 0], [0, -1]]

Rotation unitaries follow exp(-i*alpha*sigma/2), so the y-axis rotation is the
real matrix [[cos a/2, -sin a/2], [sin a/2, cos a/2]].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ALGEBRA_TOL",
    "INPUT_TOL",
    "pauli",
    "identity2",
    "bloch_from_angles",
    "bloch_to_density",
    "density_to_bloch",
    "Unitary2",
    "rotation",
    "adjoint_of",
    "compose",
]

# Tolerance for algebraic identities evaluated in double precision.
ALGEBRA_TOL = 1e-12
# Tolerance for validating user-supplied vectors and matrices.
INPUT_TOL = 1e-9

_SIGMA = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}

_IDENTITY = np.eye(2, dtype=complex)


def pauli(axis):
    """Return the Pauli matrix for axis 'x', 'y', or 'z' as a fresh 2x2 array."""
    if axis not in _SIGMA:
        raise ValueError(f"axis must be one of 'x', 'y', 'z', got {axis!r}")
    return _SIGMA[axis].copy()


def identity2():
    """The 2x2 identity matrix."""
    return _IDENTITY.copy()


def _as_bloch(v):
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"Bloch vector must have 3 real components, got shape {v.shape}")
    return v


def check_unit(v, tol=INPUT_TOL):
    """Validate that v is a unit 3-vector; return it as a float array."""
    v = _as_bloch(v)
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > tol:
        raise ValueError(f"expected a unit vector, got norm {norm}")
    return v


def bloch_from_angles(theta, phi):
    """Unit Bloch vector (sin t cos p, sin t sin p, cos t) for polar/azimuthal angles.

    theta must lie in [0, pi] and phi in [0, 2*pi].
    """
    if not (0.0 <= theta <= math.pi):
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    if not (0.0 <= phi <= 2.0 * math.pi):
        raise ValueError(f"phi must lie in [0, 2*pi], got {phi}")
    st = math.sin(theta)
    return np.array([st * math.cos(phi), st * math.sin(phi), math.cos(theta)])


def bloch_to_density(v):
    """Density matrix (1/2)(I + v.sigma) of the pure state with Bloch vector v."""
    v = check_unit(v)
    rho = 0.5 * (_IDENTITY + v[0] * _SIGMA["x"] + v[1] * _SIGMA["y"] + v[2] * _SIGMA["z"])
    return rho


def density_to_bloch(rho):
    """Recover the Bloch vector of a density matrix via trace(rho * sigma_i).

    Accepts mixed states (vector norm < 1); rejects non-Hermitian or
    non-unit-trace input.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError(f"density matrix must be 2x2, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > INPUT_TOL:
        raise ValueError("density matrix must be Hermitian")
    if abs(np.trace(rho) - 1.0) > INPUT_TOL:
        raise ValueError("density matrix must have unit trace")
    return np.array([np.trace(rho @ _SIGMA[ax]).real for ax in ("x", "y", "z")])


@dataclass(frozen=True)
class Unitary2:
    """A 2x2 unitary together with its cached SO(3) action on Bloch vectors."""

    matrix: np.ndarray
    adjoint_rotation: np.ndarray = field(init=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"unitary must be 2x2, got shape {m.shape}")
        if np.max(np.abs(m @ m.conj().T - _IDENTITY)) > INPUT_TOL:
            raise ValueError("matrix is not unitary")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        r = _adjoint_rotation(m)
        r.setflags(write=False)
        object.__setattr__(self, "adjoint_rotation", r)

    def dagger(self):
        """The inverse (conjugate-transpose) unitary."""
        return Unitary2(self.matrix.conj().T)


def _adjoint_rotation(m):
    # R_ij = (1/2) Tr(sigma_i U sigma_j U+); real for any unitary U.
    mdag = m.conj().T
    r = np.empty((3, 3))
    for i, ax_i in enumerate(("x", "y", "z")):
        for j, ax_j in enumerate(("x", "y", "z")):
            val = 0.5 * np.trace(_SIGMA[ax_i] @ m @ _SIGMA[ax_j] @ mdag)
            r[i, j] = val.real
    return r


def rotation(axis, alpha):
    """Rotation unitary exp(-i*alpha*sigma_axis/2) about the given Bloch axis."""
    if not math.isfinite(alpha):
        raise ValueError(f"rotation angle must be finite, got {alpha}")
    sig = pauli(axis)
    m = math.cos(alpha / 2) * _IDENTITY - 1j * math.sin(alpha / 2) * sig
    return Unitary2(m)


def adjoint_of(u):
    """The SO(3) rotation a unitary induces on Bloch vectors by conjugation.

    Accepts a Unitary2 or a raw 2x2 unitary array. The result is orthogonal
    with determinant +1 and independent of the unitary's global phase.
    """
    if isinstance(u, Unitary2):
        return u.adjoint_rotation.copy()
    return Unitary2(u).adjoint_rotation.copy()


def compose(u1, u2):
    """The unitary applying u1 first, then u2 (matrix product u2 @ u1)."""
    return Unitary2(u2.matrix @ u1.matrix)
