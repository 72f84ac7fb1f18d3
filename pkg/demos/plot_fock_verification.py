"""
Brute-force check in a truncated Fock basis
===========================================

Diagonalize the full Hamiltonian with photon and phonon numbers up to
n_max and watch the ground energy, entropy and negativity converge to the
Gaussian closed forms. Takes a few seconds.
"""

from polariton import SystemParams, analyze
from polariton import oracle

params = SystemParams.phonon(169.1, 169.1, 0.5 * 169.1)
exact = analyze(params)
print(f"closed form: E={exact.ground.e_ground:.10f}  S={exact.report.entropy_over_kB:.8f}"
      f"  E_N={exact.report.log_negativity:.8f}")

for row in oracle.convergence_sweep(params, [6, 10, 16, 24]):
    print(f"n_max={row['n_max']:2d}  E={row['energy']:.10f}  S={row['entropy_over_kB']:.8f}"
          f"  E_N={row['log_negativity']:.8f}")
