"""Kraus-representation freedom and the bounds built on it.

The same channel admits many Kraus representations; rotating the
derivatives with a Hermitian generator changes the cross terms
(alpha, beta) without changing the channel. Minimizing ||alpha|| under
beta = 0 gives the per-probe asymptotic precision ceiling; minimizing
without the constraint gives the exact ancilla-assisted QFI.
"""
import numpy as np

from qmetro import (
    KrausGenerator,
    alpha_beta,
    extended_channel_qfi,
    finite_n_bound_adaptive,
    finite_n_bound_parallel,
    make_amplitude_damping,
    make_dephasing,
    minimize_beta0,
)

eta = 0.5
ch = make_dephasing(eta)

print("== canonical representation (generator = 0) ==")
g0 = KrausGenerator.zeros(ch.kraus_count)
ab = alpha_beta(ch, g0)
print("4||alpha|| =", 4 * ab.alpha_norm(), "  ||beta|| =", ab.beta_norm())
print("finite-N parallel bound, N=3:", finite_n_bound_parallel(ch, g0, 3))
print("adaptive ceiling,        N=3:", finite_n_bound_adaptive(ch, g0, 3))

print("\n== optimized representation with beta = 0 ==")
report = minimize_beta0(ch)
print("per-probe bound 4 min||alpha|| =", report.value, "(expected eta/(1-eta) = 1.0)")
print("residual ||beta|| =", report.residual_beta_norm)
print("generator:\n", np.round(report.generator.h, 4))

print("\n== unconstrained minimum = exact ancilla-assisted QFI ==")
for eta in (0.3, 0.5, 0.7):
    amp = make_amplitude_damping(eta)
    ext = extended_channel_qfi(amp)
    closed = 4 * eta / (1 + np.sqrt(eta)) ** 2
    print(f"eta={eta}: 4 min||alpha|| = {ext.value:.10f}   closed form {closed:.10f}")
