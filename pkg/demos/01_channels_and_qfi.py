"""Channels and single-probe QFI.

Builds the three noise models, pushes a probe state through them and
computes the quantum Fisher information of the output family. For every
model the optimal single-probe QFI equals the decoherence parameter eta.
"""
import numpy as np

from qmetro import (
    StateFamily,
    apply,
    make_amplitude_damping,
    make_dephasing,
    make_erasure,
    optimize_input,
    qfi_value,
    sld,
)

eta = 0.6
plus = np.full((2, 2), 0.5, dtype=complex)

print(f"== dephasing, eta = {eta} ==")
ch = make_dephasing(eta)
rho_out, rho_dot = apply(ch, plus)
print("output state:\n", np.round(rho_out, 4))
print("phase derivative:\n", np.round(rho_dot, 4))

family = StateFamily(rho_out, rho_dot)
print("QFI of |+> probe:", qfi_value(family))
print("SLD spectrum:", np.round(np.linalg.eigvalsh(sld(family)), 4))

print("\n== amplitude damping keeps the excited state with probability eta ==")
excited = np.diag([0.0, 1.0]).astype(complex)
out, _ = apply(make_amplitude_damping(eta), excited)
print("population after the channel:", out[1, 1].real)

print("\n== erasure moves weight to the flag state ==")
embedded = np.zeros((3, 3), dtype=complex)
embedded[:2, :2] = plus
out, _ = apply(make_erasure(eta), embedded)
print("erased population:", out[2, 2].real, "(expected", 1 - eta, ")")

print("\n== the optimal probe is found by see-saw and its QFI is eta ==")
for name, ch in (
    ("dephasing", make_dephasing(eta)),
    ("erasure", make_erasure(eta)),
    ("amplitude damping", make_amplitude_damping(eta)),
):
    result = optimize_input(ch, ancilla_dim=1)
    print(f"{name:18s} best QFI = {result.qfi:.12f} (converged: {result.converged})")
