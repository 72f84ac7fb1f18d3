"""
Entanglement versus bare cavity energy
======================================

Entropy of entanglement and logarithmic negativity of the ground state for
two couplings. Both fall as the cavity is detuned upward, and the stronger
coupling sits above the weaker one everywhere. The CLI writes the same data:

    polariton sweep --omega-0 169.1 --start 100 --stop 300 --points 201 \\
        --g-list 33.82,84.55 --out sweep.csv
"""

import numpy as np

from polariton import SystemParams, analyze

omega_0 = 169.1
omega_c = np.linspace(100, 300, 9)

for ratio in (0.2, 0.5):
    print(f"g = {ratio} omega_0")
    for wc in omega_c:
        rep = analyze(SystemParams.phonon(wc, omega_0, ratio * omega_0)).report
        print(f"  omega_c={wc:6.1f}  S/kB={rep.entropy_over_kB:.5f}  E_N={rep.log_negativity:.5f}")
