"""Walk through the two pictures of a single y-axis rotation.

A qubit state and an observable are both unit vectors on the Bloch sphere.
In the Schrodinger picture the state rotates; in the Heisenberg picture the
observable's basis vector rotates the opposite way. The measured expectation
value (the dot product of the two vectors) is the same either way.
"""

import math

import numpy as np

from blochdyn import (Picture, QubitFrame, evolve_frame, expectation, rotation)

alpha = math.pi / 3
frame = QubitFrame(state=[0, 0, 1], basis=[0, 0, 1])
u = rotation("y", alpha)

print(f"rotation angle alpha = {alpha:.6f} rad\n")

schr = evolve_frame(frame, u, Picture.SCHRODINGER)
print("Schrodinger picture: the state moves, the basis stays")
print(f"  state  {np.round(schr.state, 6)}   (expected (sin a, 0, cos a))")
print(f"  basis  {np.round(schr.basis, 6)}")
print(f"  expectation  {schr.expectation():.12f}\n")

heis = evolve_frame(frame, u, Picture.HEISENBERG)
print("Heisenberg picture: the basis moves the opposite way, the state stays")
print(f"  state  {np.round(heis.state, 6)}")
print(f"  basis  {np.round(heis.basis, 6)}   (expected (-sin a, 0, cos a))")
print(f"  expectation  {heis.expectation():.12f}\n")

assert abs(schr.expectation() - heis.expectation()) < 1e-12
print(f"both equal cos(alpha) = {math.cos(alpha):.12f}: the pictures agree "
      "on every measurement statistic.")
