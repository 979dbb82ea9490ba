"""How a 2x2 unitary acts on the Bloch sphere.

Every single-qubit unitary induces a proper rotation of Bloch vectors via
conjugation of the Pauli matrices, R_ij = (1/2) Tr(sigma_i U sigma_j U+).
The global phase of the unitary drops out, and composing unitaries composes
the rotations.
"""

import math

import numpy as np

from blochdyn import Unitary2, adjoint_of, compose, pauli, rotation

alpha = 0.8
u = rotation("y", alpha)
print(f"U_y({alpha}):\n{np.round(u.matrix, 6)}\n")
print(f"its Bloch rotation (a rotation by alpha about the y-axis):\n"
      f"{np.round(u.adjoint_rotation, 6)}\n")

# sigma_x itself is a unitary: a half-turn about the x-axis. Its Bloch action
# flips the y and z components, which is what flips the halt qubit later on.
flip = Unitary2(pauli("x"))
print(f"sigma_x as a Bloch rotation:\n{adjoint_of(flip)}\n")

# Global phase is invisible on the sphere.
phased = Unitary2(np.exp(1j * 1.234) * u.matrix)
assert np.allclose(phased.adjoint_rotation, u.adjoint_rotation, atol=1e-12)
print("multiplying U by a global phase leaves its Bloch rotation unchanged.")

# Rotations about one axis add their angles.
twice = compose(u, u)
assert np.allclose(twice.adjoint_rotation,
                   rotation("y", 2 * alpha).adjoint_rotation, atol=1e-12)
print(f"U_y({alpha}) applied twice rotates by {2 * alpha}: angles add.")

# A full 2*pi turn returns the sphere to itself even though U itself picks
# up a sign (the SU(2) double cover).
full = rotation("y", 2 * math.pi)
print(f"\nU_y(2*pi) = -identity:\n{np.round(full.matrix, 12)}")
print(f"but its Bloch rotation is the identity:\n{np.round(full.adjoint_rotation, 12)}")
