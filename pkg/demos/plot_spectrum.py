"""
Polariton spectrum of an hBN phonon in a cavity
===============================================

Upper and lower polariton energies as the bare cavity energy is tuned
through the TO phonon at 169.1 meV, and the product/sum identities they obey.
"""

import numpy as np

from polariton import SystemParams, polariton_spectrum

omega_0 = 169.1
g = 0.5 * omega_0

###############################################################################
# Anticrossing. At resonance the two branches sit at omega_0 times the golden
# ratio and omega_0 divided by it.

for omega_c in (100.0, 140.0, 169.1, 200.0, 300.0):
    s = polariton_spectrum(SystemParams.phonon(omega_c, omega_0, g))
    print(f"omega_c={omega_c:6.1f}  omega_-={s.omega_minus:8.3f}  omega_+={s.omega_plus:8.3f}"
          f"  theta={s.theta:.4f}")

###############################################################################
# The lower branch never crosses zero: omega_+ omega_- = omega_c omega_0.

s = polariton_spectrum(SystemParams.phonon(169.1, omega_0, g))
print("product check", s.omega_plus * s.omega_minus / (169.1 * omega_0))
print("golden ratio ", s.omega_plus / omega_0, (1 + np.sqrt(5)) / 2)
