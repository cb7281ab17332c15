"""Noisy phase-encoding channels in Kraus form.

Three single-parameter noise models are provided, each combined with the
phase rotation ``U_phi = |0><0| + exp(i*phi)|1><1|`` and parameterized by a
decoherence parameter ``eta`` in (0, 1] (``eta = 1`` is noiseless):

* ``dephasing``          coherences shrink by sqrt(eta),
* ``erasure``            the probe is replaced by an orthogonal flag state
                         with probability 1 - eta (3-dimensional space),
* ``amplitude-damping``  the excited state survives with probability eta.

A family stores the Kraus operators at the working point ``phi = 0``
together with their phase derivatives. Derivatives are taken with the
traceless generator ``(|1><1| - |0><0|)/2`` on the phase-encoded qubit
(zero on phase-insensitive directions): the global-phase shift drops out
of every channel output but fixes the canonical representation cross
terms that the bound minimizations start from.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError, DomainError, NumericError, ResourceError

TP_TOL = 1e-10    # trace-preservation / anti-Hermiticity tolerance
DIM_CAP = 4096    # fail-fast cap on tensor-power dimensions

MODELS = ("dephasing", "erasure", "amplitude-damping")


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=complex)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class PhaseUnitary:
    """diag(1, e^{i phi}) on a qubit, or diag(1, e^{i phi}, 1) with a flag state."""

    phi: float
    matrix: np.ndarray

    def __post_init__(self):
        m = _frozen(self.matrix)
        d = m.shape[0]
        if np.abs(m @ m.conj().T - np.eye(d)).max() > TP_TOL:
            raise NumericError("phase matrix is not unitary within tolerance")
        object.__setattr__(self, "matrix", m)


def phase_unitary(phi: float, dim: int = 2) -> PhaseUnitary:
    if dim not in (2, 3):
        raise DimensionError("phase unitary is defined for dim 2 or 3")
    diag = [1.0, np.exp(1j * phi)] + ([1.0] if dim == 3 else [])
    return PhaseUnitary(phi, np.diag(diag))


def _half_phase_generator(dim: int) -> np.ndarray:
    g = np.zeros((dim, dim), dtype=complex)
    g[0, 0], g[1, 1] = -0.5, 0.5
    return g


@dataclass(frozen=True)
class ChannelFamily:
    """Kraus operators of a phase-encoding channel and their derivatives
    at the working point.

    Invariants checked at construction: trace preservation
    ``sum_k K_k+ K_k = 1``, matching shapes of ``kraus`` and ``kraus_dot``,
    and anti-Hermiticity of the cross term ``sum_k Kdot_k+ K_k``.
    """

    kraus: tuple
    kraus_dot: tuple
    label: str
    eta: float | None = None

    def __post_init__(self):
        ks = tuple(_frozen(k) for k in self.kraus)
        kds = tuple(_frozen(k) for k in self.kraus_dot)
        if not ks:
            raise DimensionError("a channel needs at least one Kraus operator")
        if len(ks) != len(kds):
            raise DimensionError("kraus and kraus_dot must have equal lengths")
        shape = ks[0].shape
        for k in ks + kds:
            if k.shape != shape:
                raise DimensionError("all Kraus operators must share one shape")
            if not np.isfinite(k).all():
                raise NumericError("Kraus operators must be finite")
        d_in = shape[1]
        tp = sum(k.conj().T @ k for k in ks)
        if np.abs(tp - np.eye(d_in)).max() > TP_TOL:
            raise NumericError("Kraus operators do not preserve the trace")
        beta = sum(kd.conj().T @ k for k, kd in zip(ks, kds))
        if np.abs(beta + beta.conj().T).max() > TP_TOL:
            raise NumericError("derivative cross term is not anti-Hermitian")
        object.__setattr__(self, "kraus", ks)
        object.__setattr__(self, "kraus_dot", kds)

    @property
    def dim_in(self) -> int:
        return self.kraus[0].shape[1]

    @property
    def dim_out(self) -> int:
        return self.kraus[0].shape[0]

    @property
    def kraus_count(self) -> int:
        return len(self.kraus)


def _check_eta(eta: float) -> float:
    eta = float(eta)
    if not 0.0 < eta <= 1.0:
        raise DomainError("eta must lie in (0, 1]")
    return eta


def make_dephasing(eta: float) -> ChannelFamily:
    """Dephasing channel with phase encoding.

    Kraus operators at the working point::

        K0 = sqrt((1+sqrt(eta))/2) * I        K1 = sqrt((1-sqrt(eta))/2) * sigma_z

    Off-diagonal density matrix elements shrink by sqrt(eta).
    """
    eta = _check_eta(eta)
    a = np.sqrt((1 + np.sqrt(eta)) / 2)
    b = np.sqrt((1 - np.sqrt(eta)) / 2)
    k0 = a * np.eye(2, dtype=complex)
    k1 = b * np.diag([1.0, -1.0]).astype(complex)
    g = _half_phase_generator(2)
    return ChannelFamily(
        kraus=(k0, k1),
        kraus_dot=(1j * k0 @ g, 1j * k1 @ g),
        label="dephasing",
        eta=eta,
    )


def make_erasure(eta: float) -> ChannelFamily:
    """Erasure channel: with probability 1 - eta the probe is moved to a
    third, phase-insensitive flag state.

    Kraus operators (3x3, flag state is index 2)::

        K0 = sqrt(eta) * (|0><0| + |1><1|)    K1 = |2><2|
        K2 = sqrt(1-eta) * |2><0|             K3 = sqrt(1-eta) * |2><1|
    """
    eta = _check_eta(eta)
    k0 = np.diag([np.sqrt(eta), np.sqrt(eta), 0.0]).astype(complex)
    k1 = np.zeros((3, 3), dtype=complex)
    k1[2, 2] = 1.0
    k2 = np.zeros((3, 3), dtype=complex)
    k2[2, 0] = np.sqrt(1 - eta)
    k3 = np.zeros((3, 3), dtype=complex)
    k3[2, 1] = np.sqrt(1 - eta)
    g = _half_phase_generator(3)
    ks = (k0, k1, k2, k3)
    return ChannelFamily(
        kraus=ks,
        kraus_dot=tuple(1j * k @ g for k in ks),
        label="erasure",
        eta=eta,
    )


def make_amplitude_damping(eta: float) -> ChannelFamily:
    """Amplitude damping: the excited state decays with probability 1 - eta.

    Kraus operators::

        K0 = diag(1, sqrt(eta))               K1 = sqrt(1-eta) * |0><1|
    """
    eta = _check_eta(eta)
    k0 = np.diag([1.0, np.sqrt(eta)]).astype(complex)
    k1 = np.zeros((2, 2), dtype=complex)
    k1[0, 1] = np.sqrt(1 - eta)
    g = _half_phase_generator(2)
    return ChannelFamily(
        kraus=(k0, k1),
        kraus_dot=(1j * k0 @ g, 1j * k1 @ g),
        label="amplitude-damping",
        eta=eta,
    )


_MAKERS = {
    "dephasing": make_dephasing,
    "erasure": make_erasure,
    "amplitude-damping": make_amplitude_damping,
}


def make_channel(model: str, eta: float) -> ChannelFamily:
    """Construct a channel by model name ('dephasing', 'erasure', 'amplitude-damping')."""
    try:
        maker = _MAKERS[model]
    except KeyError:
        raise DomainError(f"unknown model {model!r}, expected one of {MODELS}") from None
    return maker(eta)


def compose(outer: ChannelFamily, inner: ChannelFamily) -> ChannelFamily:
    """Apply ``inner`` first, then ``outer``; derivatives by the product rule."""
    if inner.dim_out != outer.dim_in:
        raise DimensionError(
            f"cannot compose: inner output dim {inner.dim_out} != outer input dim {outer.dim_in}"
        )
    kraus, kraus_dot = [], []
    for a, ad in zip(outer.kraus, outer.kraus_dot):
        for b, bd in zip(inner.kraus, inner.kraus_dot):
            kraus.append(a @ b)
            kraus_dot.append(ad @ b + a @ bd)
    same = outer.label == inner.label
    eta = (
        outer.eta * inner.eta
        if same and outer.eta is not None and inner.eta is not None
        else None
    )
    return ChannelFamily(
        kraus=tuple(kraus),
        kraus_dot=tuple(kraus_dot),
        label=outer.label if same else f"{outer.label}*{inner.label}",
        eta=eta,
    )


def tensor_power(ch: ChannelFamily, n: int, dim_cap: int = DIM_CAP) -> ChannelFamily:
    """``n`` parallel copies of the channel; derivatives by the Leibniz rule."""
    n = int(n)
    if n < 1:
        raise DomainError("tensor power requires n >= 1")
    if ch.dim_in**n > dim_cap or ch.dim_out**n > dim_cap:
        raise ResourceError(
            f"tensor power dimension {ch.dim_in}^{n} exceeds the cap {dim_cap}"
        )
    if n == 1:
        return ch
    kraus = list(ch.kraus)
    kraus_dot = list(ch.kraus_dot)
    for _ in range(n - 1):
        new_k, new_kd = [], []
        for a, ad in zip(kraus, kraus_dot):
            for b, bd in zip(ch.kraus, ch.kraus_dot):
                new_k.append(np.kron(a, b))
                new_kd.append(np.kron(ad, b) + np.kron(a, bd))
        kraus, kraus_dot = new_k, new_kd
    return ChannelFamily(tuple(kraus), tuple(kraus_dot), label=ch.label, eta=ch.eta)


def apply(ch: ChannelFamily, rho) -> tuple[np.ndarray, np.ndarray]:
    """Channel output and its phase derivative for a density matrix input."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (ch.dim_in, ch.dim_in):
        raise DimensionError(
            f"input state shape {rho.shape} does not match channel input dim {ch.dim_in}"
        )
    if np.abs(rho - rho.conj().T).max() > TP_TOL:
        raise DomainError("input state must be Hermitian")
    if abs(np.trace(rho) - 1.0) > TP_TOL:
        raise DomainError("input state must have unit trace")
    if np.linalg.eigvalsh(rho)[0] < -TP_TOL:
        raise DomainError("input state must be positive semidefinite")
    out = sum(k @ rho @ k.conj().T for k in ch.kraus)
    out_dot = sum(
        kd @ rho @ k.conj().T + k @ rho @ kd.conj().T
        for k, kd in zip(ch.kraus, ch.kraus_dot)
    )
    return out, out_dot


def compress(ch: ChannelFamily, tol: float = 1e-14) -> ChannelFamily:
    """Reduce a Kraus family to a minimal set.

    Rank-factorizes the Gram matrix of the vectorized Kraus operators and
    keeps the eigendirections with relative weight above ``tol``; the
    channel output and its derivative are preserved exactly on the kept
    rank. Weights of discarded directions bound the introduced error.
    """
    v = np.column_stack([k.reshape(-1) for k in ch.kraus])
    vd = np.column_stack([k.reshape(-1) for k in ch.kraus_dot])
    gram = v.conj().T @ v
    w, c = np.linalg.eigh(gram)
    keep = w > tol * max(w[-1], 1e-300)
    basis = v @ c[:, keep]
    basis_dot = vd @ c[:, keep]
    shape = (ch.dim_out, ch.dim_in)
    kraus = tuple(basis[:, j].reshape(shape) for j in range(basis.shape[1]))
    kraus_dot = tuple(basis_dot[:, j].reshape(shape) for j in range(basis.shape[1]))
    return ChannelFamily(kraus, kraus_dot, label=ch.label, eta=ch.eta)
