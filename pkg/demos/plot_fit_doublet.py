"""
From a measured doublet to entanglement
=======================================

Two measured polariton energies fix the bare cavity energy and the coupling
exactly, and with them the ground-state entanglement. Measurement errors
are propagated to first order.
"""

from polariton import MeasuredDoublet, evaluate_doublet, invert_spectrum

m = MeasuredDoublet(273.62, 104.51, omega_0=169.1, sigma_plus=0.5, sigma_minus=0.5)
inv = invert_spectrum(m)
print(f"omega_c={inv.omega_c:.3f} meV  g={inv.g:.3f} meV  c={inv.c:.5f}")

row = evaluate_doublet(m)
print(f"E_N = {row['log_negativity']:.4f} +/- {row['log_negativity_err']:.4f}")
print(f"g   = {row['g_meV']:.3f} +/- {row['g_err_meV']:.3f} meV")
