"""Dense complex linear algebra: Hermitian eigendecompositions, operator
norms, tensor products and partial traces.

All functions are pure and operate on plain ``numpy`` arrays interpreted as
complex matrices. Matrices stay small (a few hundred rows at most), so the
LAPACK dense routines behind ``numpy.linalg`` are used throughout.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .exceptions import DimensionError, NumericError

HERM_TOL = 1e-9   # relative Hermiticity tolerance
EIG_TOL = 1e-10   # relative reconstruction tolerance of the eigensystem


class HermitianEigensystem(NamedTuple):
    eigenvalues: np.ndarray   # real, ascending
    eigenvectors: np.ndarray  # orthonormal columns, V @ diag(w) @ V+ == input


def as_matrix(m, name: str = "matrix") -> np.ndarray:
    """Coerce to a 2-D complex array, rejecting empty or non-finite input."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise DimensionError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise DimensionError(f"{name} must not be empty")
    if not np.isfinite(arr).all():
        raise NumericError(f"{name} contains non-finite entries")
    return arr


def hermitian_eigensystem(m) -> HermitianEigensystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    arr = as_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {arr.shape}")
    scale = max(1.0, float(np.abs(arr).max()))
    if np.abs(arr - arr.conj().T).max() > HERM_TOL * scale:
        raise NumericError("matrix is not Hermitian within tolerance")
    sym = (arr + arr.conj().T) / 2
    w, v = np.linalg.eigh(sym)
    return HermitianEigensystem(w, v)


def operator_norm(m) -> float:
    """Largest singular value, computed as sqrt(lambda_max(m+ m))."""
    arr = as_matrix(m)
    w = np.linalg.eigvalsh(arr.conj().T @ arr)
    return float(np.sqrt(max(w[-1], 0.0)))


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product with the first factor's indices major."""
    return np.kron(as_matrix(a, "a"), as_matrix(b, "b"))


def partial_trace(m, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace out all subsystems not listed in ``keep``.

    ``dims`` are the tensor factor dimensions of the square matrix ``m``;
    kept subsystems remain in their original order.
    """
    arr = as_matrix(m)
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims):
        raise DimensionError("subsystem dimensions must be positive")
    total = int(np.prod(dims))
    if arr.shape != (total, total):
        raise DimensionError(
            f"product of dims {dims} does not match matrix shape {arr.shape}"
        )
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= len(dims) for k in keep):
        raise DimensionError(f"keep indices {keep} out of range for {len(dims)} subsystems")

    n = len(dims)
    traced = [i for i in range(n) if i not in keep]
    out = arr.reshape(dims + dims)
    remaining = n
    for i in sorted(traced, reverse=True):
        out = np.trace(out, axis1=i, axis2=i + remaining)
        remaining -= 1
    kept_dim = int(np.prod([dims[k] for k in keep])) if keep else 1
    return out.reshape(kept_dim, kept_dim)
