"""Quantum Fisher information of differentiable state families and
see-saw maximization of the channel QFI over input probe states.

The QFI of a family (rho, drho) is computed in the eigenbasis of rho:

    F = 2 * sum_{ij: l_i + l_j > cutoff} |<i|drho|j>|^2 / (l_i + l_j),

which equals Tr(rho L^2) with L the symmetric logarithmic derivative.
The see-saw alternates between the closed-form L step (the SLD of the
current output) and a linear input step (top eigenvector of the
objective's adjoint), so the objective never decreases.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import DIM_CAP, TP_TOL, ChannelFamily
from .exceptions import DimensionError, DomainError, NumericError, ResourceError

SLD_CUTOFF = 1e-12  # eigenvalue-pair cutoff regularizing rank-deficient rho


@dataclass(frozen=True)
class StateFamily:
    """A density matrix and its parameter derivative at the working point."""

    rho: np.ndarray
    rho_dot: np.ndarray

    def __post_init__(self):
        rho = np.asarray(self.rho, dtype=complex)
        dot = np.asarray(self.rho_dot, dtype=complex)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1] or rho.shape != dot.shape:
            raise DimensionError("rho and rho_dot must be square matrices of equal shape")
        if not (np.isfinite(rho).all() and np.isfinite(dot).all()):
            raise NumericError("state family contains non-finite entries")
        if np.abs(rho - rho.conj().T).max() > TP_TOL:
            raise DomainError("rho must be Hermitian")
        if abs(np.trace(rho) - 1.0) > TP_TOL:
            raise DomainError("rho must have unit trace")
        if np.linalg.eigvalsh(rho)[0] < -TP_TOL:
            raise DomainError("rho must be positive semidefinite")
        if np.abs(dot - dot.conj().T).max() > TP_TOL:
            raise DomainError("rho_dot must be Hermitian")
        if abs(np.trace(dot)) > TP_TOL:
            raise DomainError("rho_dot must be traceless")
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "rho_dot", dot)


def _sld_blocks(rho: np.ndarray, rho_dot: np.ndarray, cutoff: float):
    lam, v = np.linalg.eigh(rho)
    r = v.conj().T @ rho_dot @ v
    den = lam[:, None] + lam[None, :]
    mask = den > cutoff
    return lam, v, r, den, mask


def sld(f: StateFamily, cutoff: float = SLD_CUTOFF) -> np.ndarray:
    """Symmetric logarithmic derivative: the Hermitian L solving
    drho = (L rho + rho L)/2 on the support of rho, zero elsewhere."""
    _, v, r, den, mask = _sld_blocks(f.rho, f.rho_dot, cutoff)
    lb = np.zeros_like(r)
    lb[mask] = 2 * r[mask] / den[mask]
    return v @ lb @ v.conj().T


def qfi_value(f: StateFamily, cutoff: float = SLD_CUTOFF) -> float:
    """QFI of the family, Tr(rho L^2) evaluated in the eigenbasis of rho."""
    _, _, r, den, mask = _sld_blocks(f.rho, f.rho_dot, cutoff)
    return float(np.sum(2 * np.abs(r[mask]) ** 2 / den[mask]).real)


def qfi_pure(psi, psi_dot) -> float:
    """QFI of a pure family: 4 (<dpsi|dpsi> - |<psi|dpsi>|^2)."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    dot = np.asarray(psi_dot, dtype=complex).reshape(-1)
    if psi.shape != dot.shape:
        raise DimensionError("psi and psi_dot must have equal length")
    return float(4 * (np.vdot(dot, dot).real - abs(np.vdot(psi, dot)) ** 2))


@dataclass(frozen=True)
class SeesawOptions:
    restarts: int = 20
    max_iters: int = 2000
    tol: float = 1e-10
    patience: int = 5
    seed: int = 7


@dataclass(frozen=True)
class SeesawResult:
    qfi: float
    optimal_input: np.ndarray  # pure state vector on probe (x ancilla)
    iterations: int
    restarts_used: int
    converged: bool


def _extended_ops(ch: ChannelFamily, ancilla_dim: int):
    if ancilla_dim == 1:
        return list(ch.kraus), list(ch.kraus_dot)
    eye = np.eye(ancilla_dim, dtype=complex)
    return [np.kron(k, eye) for k in ch.kraus], [np.kron(k, eye) for k in ch.kraus_dot]


def optimize_input(
    ch: ChannelFamily,
    ancilla_dim: int = 1,
    opts: SeesawOptions | None = None,
    dim_cap: int = DIM_CAP,
) -> SeesawResult:
    """Maximize the output QFI over pure input states by see-saw alternation.

    ``ancilla_dim = 1`` optimizes over probe states only; larger values
    append a noiseless ancilla the probe may be entangled with. Restarts
    draw independent Haar-like initial states from seeds derived per
    restart index, and the best run is returned.
    """
    opts = opts or SeesawOptions()
    if opts.restarts < 1 or opts.max_iters < 1 or opts.patience < 1:
        raise DomainError("restarts, max_iters and patience must be >= 1")
    ancilla_dim = int(ancilla_dim)
    if ancilla_dim < 1:
        raise DomainError("ancilla_dim must be >= 1")
    dim = ch.dim_in * ancilla_dim
    if dim > dim_cap:
        raise ResourceError(f"input dimension {dim} exceeds the cap {dim_cap}")

    ks, kds = _extended_ops(ch, ancilla_dim)
    best_q, best_psi, best_it, best_conv = -np.inf, None, 0, False
    for restart in range(opts.restarts):
        rng = np.random.default_rng([opts.seed, restart])
        psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        psi /= np.linalg.norm(psi)
        prev = -np.inf
        calm = 0
        converged = False
        iterations = 0
        evaluated_psi = psi
        for iterations in range(1, opts.max_iters + 1):
            evaluated_psi = psi
            vecs = [k @ psi for k in ks]
            dvecs = [kd @ psi for kd in kds]
            rho = sum(np.outer(v, v.conj()) for v in vecs)
            rho_dot = sum(
                np.outer(dv, v.conj()) + np.outer(v, dv.conj())
                for v, dv in zip(vecs, dvecs)
            )
            _, v, r, den, mask = _sld_blocks(rho, rho_dot, SLD_CUTOFF)
            q = float(np.sum(2 * np.abs(r[mask]) ** 2 / den[mask]).real)
            # see-saw objective is non-decreasing by construction
            assert q >= prev - 1e-9 * max(1.0, abs(prev)), (
                f"see-saw objective decreased: {prev} -> {q}"
            )
            if abs(q - prev) <= opts.tol * max(1.0, abs(q)):
                calm += 1
                if calm >= opts.patience:
                    converged = True
                    break
            else:
                calm = 0
            prev = q

            lb = np.zeros_like(r)
            lb[mask] = 2 * r[mask] / den[mask]
            sldm = v @ lb @ v.conj().T
            sld2 = sldm @ sldm
            gain = sum(
                2 * (kd.conj().T @ sldm @ k + k.conj().T @ sldm @ kd)
                - k.conj().T @ sld2 @ k
                for k, kd in zip(ks, kds)
            )
            _, u = np.linalg.eigh(gain)
            psi = u[:, -1]
        if q > best_q:
            best_q, best_psi = q, evaluated_psi
            best_it, best_conv = iterations, converged
    return SeesawResult(
        qfi=best_q,
        optimal_input=best_psi,
        iterations=best_it,
        restarts_used=opts.restarts,
        converged=best_conv,
    )
