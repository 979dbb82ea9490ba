"""The halting-machine contradiction.

A machine that rotates a system qubit by alpha about the y-axis and flips a
halt qubit with sigma_x behaves identically in both pictures when its input
is the state vector. Feed it the observable's basis vector instead and the
two pictures rotate it in opposite directions: the halt qubit still flips in
both, so the machine claims completion for two different outputs whenever
alpha is not a multiple of pi.
"""

import math

import numpy as np

from blochdyn import run_consistent_scenario, run_contradiction_sweep

# Legal run: state vector as input. The pictures agree for every alpha.
print("state-vector input (expectations agree in both pictures):")
for alpha in [0.0, math.pi / 4, math.pi / 2, math.pi]:
    r = run_consistent_scenario(alpha)
    print(f"  alpha={alpha:8.5f}  Schrodinger {r.schrodinger_expectation:+.10f}"
          f"  Heisenberg {r.heisenberg_expectation:+.10f}"
          f"  halted={r.both_halted}")

# Basis vector as input: the Schrodinger branch rotates it forward, the
# Heisenberg branch backward. The outputs separate by arccos(cos 2*alpha).
print("\nbasis-vector input (outputs diverge, halt flips regardless):")
alphas = np.linspace(0.0, 2 * math.pi, 9)
for rec in run_contradiction_sweep(alphas):
    s = np.round(rec.schrodinger_output, 6)
    h = np.round(rec.heisenberg_output, 6)
    tag = "CONTRADICTION" if rec.divergence_angle > 1e-9 else "agree"
    print(f"  alpha={rec.alpha:8.5f}  out_S={s}  out_H={h}"
          f"  divergence={rec.divergence_angle:8.5f}  {tag}")

print("\nthe divergence is zero exactly at alpha = k*pi; everywhere else the "
      "machine halts on two different answers.")
