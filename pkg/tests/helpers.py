"""Shared test utilities: random quantum objects and analytic reference
generators whose alpha/beta values are known in closed form."""

import numpy as np

from qmetro import KrausGenerator

SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SY = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SZ = np.diag([1.0, -1.0]).astype(complex)


def random_pure(rng, dim):
    psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return psi / np.linalg.norm(psi)


def random_density(rng, dim, full_rank=True):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    if full_rank:
        rho += 0.1 * np.eye(dim)
    return rho / np.trace(rho).real


def random_hermitian(rng, dim):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2


def random_traceless_hermitian(rng, dim):
    h = random_hermitian(rng, dim)
    return h - np.trace(h) / dim * np.eye(dim)


def random_generator(rng, size, scale=1.0):
    return KrausGenerator(scale * random_hermitian(rng, size))


def random_kraus_channel(rng, dim, count):
    """Haar-like CPTP map: random stack normalized by (sum K+K)^(-1/2)."""
    ops = [rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)) for _ in range(count)]
    norm = sum(k.conj().T @ k for k in ops)
    w, v = np.linalg.eigh(norm)
    inv_sqrt = v @ np.diag(1 / np.sqrt(w)) @ v.conj().T
    return [k @ inv_sqrt for k in ops]


def haar_unitary(rng, dim):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))


# --- analytic Kraus-rotation fixtures -------------------------------------
#
# In the stored convention (traceless phase generator diag(-1/2, 1/2)) the
# following generators reproduce the closed-form alpha/beta values:
#
#   dephasing, speed s = sqrt(1-eta)/2:  4||alpha|| = eta (single-probe opt)
#   dephasing, speed s = 1/(2 sqrt(1-eta)): beta = 0, 4||alpha|| = eta/(1-eta)
#   erasure, phases +-1/(2(1-eta)) on the erasing operators:
#       beta = 0, 4||alpha|| = eta/(1-eta)
#   amplitude damping, diag(-1/2, (1+eta)/(2(1-eta))):
#       beta = 0, 4||alpha|| = 4 eta/(1-eta)


def dephasing_single_probe_generator(eta):
    return KrausGenerator(-(np.sqrt(1 - eta) / 2) * SX)


def dephasing_beta0_generator(eta):
    chi = 1 / (2 * np.sqrt(1 - eta))
    return KrausGenerator(-chi * SX)


def erasure_beta0_generator(eta):
    zeta = 1 / (2 * (1 - eta))
    return KrausGenerator(np.diag([0.0, 0.0, -zeta, zeta]).astype(complex))


def amplitude_damping_beta0_generator(eta):
    xi_half = (1 + eta) / (2 * (1 - eta))
    return KrausGenerator(np.diag([-0.5, xi_half]).astype(complex))
