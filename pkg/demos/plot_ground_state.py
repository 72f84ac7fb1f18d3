"""
Gaussian ground state and virtual photons
=========================================

The polariton vacuum is a correlated two-mode Gaussian. Its coefficients
follow from the Bogoliubov transformation, and its photon content is
nonzero even though no polariton is excited.
"""

import numpy as np

from polariton import SystemParams, analyze

omega_0 = 169.1

for ratio in (0.1, 0.2, 0.5, 1.0):
    res = analyze(SystemParams.phonon(omega_0, omega_0, ratio * omega_0))
    gs = res.ground
    print(f"g/omega_0={ratio:4.1f}  a={gs.a:.5f}  b={gs.b:.5f}  c={gs.c:.5f}"
          f"  ab-c^2={gs.a * gs.b - gs.c ** 2:.3f}  <n>={res.report.n_virtual:.5f}")

###############################################################################
# At g = omega_0 / 2 on resonance the coefficients are simple surds.

gs = analyze(SystemParams.phonon(omega_0, omega_0, 0.5 * omega_0)).ground
print(gs.a * np.sqrt(5), gs.b * np.sqrt(5), gs.c * np.sqrt(5))
