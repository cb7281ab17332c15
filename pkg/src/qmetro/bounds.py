"""Kraus-representation freedom and the precision bounds built on it.

A Hermitian generator ``h`` parameterizes the local freedom of the Kraus
representation: the derivatives rotate as

    Kdot_k  ->  Kdot_k - i * sum_l h_kl K_l,

while the channel itself is unchanged. From a rotated representation two
matrices drive every bound:

    alpha = sum_k Kdot_k+ Kdot_k        (Hermitian, PSD)
    beta  = sum_k Kdot_k+ K_k           (anti-Hermitian)

The finite-N parallel bound is ``4 [N ||alpha|| + N(N-1) ||beta||^2]``, the
adaptive ceiling is ``4 [N ||alpha|| + N(N-1) ||beta|| (||alpha|| + ||beta||
+ 1)]``, and the asymptotic per-probe bound is ``4 min ||alpha||`` subject
to ``beta = 0``. Minimizations over ``h`` are convex: ``alpha(h) = M(h)+
M(h)`` with ``M`` affine in ``h``, so ``||alpha(h)|| = sigma_max(M)^2`` and
``beta(h)`` is affine. They are solved as conic programs via cvxpy.

Minimizing ``4 ||alpha||`` over *all* representations of a channel equals
the exact QFI of the channel extended by a noiseless ancilla; applied to an
N-fold tensor channel without assuming product structure it yields the
exact ancilla-assisted N-probe QFI.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import cvxpy as cp
import numpy as np

from .channels import DIM_CAP, ChannelFamily
from .exceptions import (
    ConstraintError,
    DimensionError,
    DomainError,
    NumericError,
    ResourceError,
)
from .linalg import HERM_TOL, operator_norm
from .qfi import StateFamily, qfi_value

CONSTRAINT_TOL = 1e-7  # acceptable ||beta|| residual for beta=0 schemes

SCHEMES = ("asymptotic-beta0", "finite-par", "finite-adaptive", "extended-exact", "simulation")


@dataclass(frozen=True)
class KrausGenerator:
    """Hermitian matrix of size (Kraus count + zero padding)."""

    h: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.h, dtype=complex)
        if h.ndim != 2 or h.shape[0] != h.shape[1]:
            raise DimensionError("generator must be a square matrix")
        if not np.isfinite(h).all():
            raise NumericError("generator contains non-finite entries")
        scale = max(1.0, float(np.abs(h).max()))
        if np.abs(h - h.conj().T).max() > HERM_TOL * scale:
            raise NumericError("generator must be Hermitian")
        h = (h + h.conj().T) / 2
        h.setflags(write=False)
        object.__setattr__(self, "h", h)

    @property
    def size(self) -> int:
        return self.h.shape[0]

    @classmethod
    def zeros(cls, size: int) -> "KrausGenerator":
        return cls(np.zeros((size, size), dtype=complex))


@dataclass(frozen=True)
class AlphaBeta:
    """The pair (alpha, beta) of a chosen Kraus representation."""

    alpha: np.ndarray
    beta: np.ndarray

    def alpha_norm(self) -> float:
        return operator_norm(self.alpha)

    def beta_norm(self) -> float:
        return operator_norm(self.beta)


@dataclass(frozen=True)
class SolverOptions:
    solver: str = "CLARABEL"
    tol: float = 1e-9        # accuracy target for the fallback solver
    grad_tol: float = 1e-4   # stationarity certificate threshold
    max_iters: int = 50000   # iteration cap for the fallback solver


@dataclass(frozen=True)
class BoundReport:
    scheme: str
    n: int
    value: float
    generator: KrausGenerator
    residual_beta_norm: float
    converged: bool = True


def _padded_ops(ch: ChannelFamily, size: int):
    """Kraus and derivative lists padded with zero operators up to ``size``."""
    r = ch.kraus_count
    if size < r:
        raise DimensionError(f"generator size {size} smaller than Kraus count {r}")
    zero = np.zeros((ch.dim_out, ch.dim_in), dtype=complex)
    ks = list(ch.kraus) + [zero] * (size - r)
    kds = list(ch.kraus_dot) + [zero] * (size - r)
    return ks, kds


def _rotated_derivatives(ks, kds, h):
    return [kd - 1j * sum(h[k, l] * ks[l] for l in range(len(ks))) for k, kd in enumerate(kds)]


def alpha_beta(ch: ChannelFamily, g: KrausGenerator) -> AlphaBeta:
    """alpha and beta of the representation rotated by generator ``g``."""
    ks, kds = _padded_ops(ch, g.size)
    rot = _rotated_derivatives(ks, kds, g.h)
    alpha = sum(a.conj().T @ a for a in rot)
    beta = sum(a.conj().T @ k for a, k in zip(rot, ks))
    return AlphaBeta(alpha, beta)


def finite_n_bound_parallel(ch: ChannelFamily, g: KrausGenerator, n: int) -> float:
    """4 [N ||alpha|| + N(N-1) ||beta||^2] for the representation given by ``g``."""
    n = _check_n(n)
    ab = alpha_beta(ch, g)
    return 4 * (n * ab.alpha_norm() + n * (n - 1) * ab.beta_norm() ** 2)


def finite_n_bound_adaptive(ch: ChannelFamily, g: KrausGenerator, n: int) -> float:
    """4 [N ||alpha|| + N(N-1) ||beta|| (||alpha|| + ||beta|| + 1)]."""
    n = _check_n(n)
    ab = alpha_beta(ch, g)
    na, nb = ab.alpha_norm(), ab.beta_norm()
    return 4 * (n * na + n * (n - 1) * nb * (na + nb + 1))


def _check_n(n: int) -> int:
    n = int(n)
    if n < 1:
        raise DomainError("probe count N must be >= 1")
    return n


# ---------------------------------------------------------------------------
# convex minimization over generators


def _hermitian_basis(r: int):
    basis = []
    for i in range(r):
        e = np.zeros((r, r), dtype=complex)
        e[i, i] = 1.0
        basis.append(e)
    s = 1 / np.sqrt(2)
    for i in range(r):
        for j in range(i + 1, r):
            e = np.zeros((r, r), dtype=complex)
            e[i, j] = e[j, i] = s
            basis.append(e)
            e = np.zeros((r, r), dtype=complex)
            e[i, j] = 1j * s
            e[j, i] = -1j * s
            basis.append(e)
    return basis


def _cross_term_maps(ks, kds):
    """Constant data of the affine maps h -> S(h) and h -> beta(h).

    ``S(h) = sum_lk h_lk K_l+ K_k`` and ``beta(h) = beta0 + i S(h)``; the
    beta = 0 constraint is the linear system ``S(h) == 1j * beta0``.
    """
    r = len(ks)
    w = np.stack([(ks[l].conj().T @ ks[k]).reshape(-1) for l in range(r) for k in range(r)])
    beta0 = sum(kd.conj().T @ k for k, kd in zip(ks, kds))
    target = 1j * beta0
    return w, target


def _constraint_matrix(ks, kds):
    """Real-linear system E x = vec(target) for beta(h) = 0 over a Hermitian basis."""
    basis = _hermitian_basis(len(ks))
    w, target = _cross_term_maps(ks, kds)
    cols = []
    for hm in basis:
        s = (hm.reshape(1, -1) @ w).reshape(target.shape)
        cols.append(np.concatenate([s.real.reshape(-1), s.imag.reshape(-1)]))
    e = np.column_stack(cols)
    rhs = np.concatenate([target.real.reshape(-1), target.imag.reshape(-1)])
    return e, rhs, basis


def beta0_feasible_generator(ch: ChannelFamily, pad: int = 0) -> KrausGenerator:
    """Least-squares solution of beta(h) = 0, or ConstraintError if none exists."""
    ks, kds = _padded_ops(ch, ch.kraus_count + pad)
    e, rhs, basis = _constraint_matrix(ks, kds)
    x, *_ = np.linalg.lstsq(e, rhs, rcond=None)
    residual = np.abs(e @ x - rhs).max()
    if residual > 1e-9 * max(1.0, np.abs(rhs).max()):
        raise ConstraintError(
            "no Kraus representation with vanishing cross term exists "
            f"(linear system residual {residual:.2e})"
        )
    h = sum(xi * hm for xi, hm in zip(x, basis))
    return KrausGenerator(h)


def _solve_generator_program(ch, pad, n, beta0, opts):
    """Minimize the finite-N objective (or plain 4||alpha|| for n=1) over h."""
    r = ch.kraus_count + pad
    d_in, d_out = ch.dim_in, ch.dim_out
    if r * d_out > DIM_CAP:
        raise ResourceError(f"stacked representation size {r * d_out} exceeds the cap {DIM_CAP}")
    ks, kds = _padded_ops(ch, r)
    tflat = np.stack([k.reshape(-1) for k in ks])
    m0 = np.vstack(kds)
    w, target = _cross_term_maps(ks, kds)

    h = cp.Variable((r, r), hermitian=True)
    mix = cp.reshape(h @ tflat, (r * d_out, d_in), order="C")
    m = m0 - 1j * mix
    s_expr = cp.reshape(cp.reshape(h, (1, r * r), order="C") @ w, (d_in, d_in), order="C")

    constraints = []
    if beta0:
        constraints.append(s_expr == target)
    sigma = cp.norm(m, 2)
    if n == 1:
        objective = sigma
    else:
        beta_expr = (-1j) * target + 1j * s_expr
        objective = 4 * n * cp.square(sigma) + 4 * n * (n - 1) * cp.square(
            cp.norm(beta_expr, 2)
        )
    problem = cp.Problem(cp.Minimize(objective), constraints)
    status = None
    try:
        problem.solve(solver=opts.solver)
        status = problem.status
    except cp.error.SolverError:
        status = None
    if status != cp.OPTIMAL or h.value is None:
        try:
            problem.solve(solver="SCS", eps=opts.tol, max_iters=opts.max_iters)
            status = problem.status
        except cp.error.SolverError:
            status = None
    if h.value is None:
        return None, False
    return np.asarray(h.value), status == cp.OPTIMAL


def minimize_beta0(
    ch: ChannelFamily, pad: int = 0, opts: SolverOptions | None = None
) -> BoundReport:
    """Per-probe asymptotic bound: 4 min ||alpha(h)|| subject to beta(h) = 0."""
    opts = opts or SolverOptions()
    feasible = beta0_feasible_generator(ch, pad)  # raises if infeasible
    h, converged = _solve_generator_program(ch, pad, 1, True, opts)
    if h is None:
        g = feasible
        converged = False
    else:
        g = KrausGenerator(h)
    ab = alpha_beta(ch, g)
    residual = ab.beta_norm()
    return BoundReport(
        scheme="asymptotic-beta0",
        n=1,
        value=4 * ab.alpha_norm(),
        generator=g,
        residual_beta_norm=residual,
        converged=converged and residual <= CONSTRAINT_TOL,
    )


def minimize_finite_parallel(
    ch: ChannelFamily, n: int, pad: int = 0, opts: SolverOptions | None = None
) -> BoundReport:
    """Minimize the finite-N parallel bound over generators."""
    n = _check_n(n)
    opts = opts or SolverOptions()
    h, converged = _solve_generator_program(ch, pad, n, False, opts)
    if h is None:
        g = KrausGenerator.zeros(ch.kraus_count + pad)
        converged = False
    else:
        g = KrausGenerator(h)
    ab = alpha_beta(ch, g)
    return BoundReport(
        scheme="finite-par",
        n=n,
        value=4 * (n * ab.alpha_norm() + n * (n - 1) * ab.beta_norm() ** 2),
        generator=g,
        residual_beta_norm=ab.beta_norm(),
        converged=converged,
    )


def minimize_finite_adaptive(
    ch: ChannelFamily, n: int, pad: int = 0, opts: SolverOptions | None = None
) -> BoundReport:
    """Upper bound on the minimal adaptive ceiling.

    The adaptive objective is not jointly convex, so the minimum is taken
    over three candidate generators: zero, the finite-parallel minimizer
    and (when feasible) the beta = 0 minimizer.
    """
    n = _check_n(n)
    opts = opts or SolverOptions()
    candidates = [KrausGenerator.zeros(ch.kraus_count + pad)]
    par = minimize_finite_parallel(ch, n, pad, opts)
    candidates.append(par.generator)
    converged = par.converged
    try:
        candidates.append(minimize_beta0(ch, pad, opts).generator)
    except ConstraintError:
        pass
    best = min(candidates, key=lambda g: finite_n_bound_adaptive(ch, g, n))
    ab = alpha_beta(ch, best)
    return BoundReport(
        scheme="finite-adaptive",
        n=n,
        value=finite_n_bound_adaptive(ch, best, n),
        generator=best,
        residual_beta_norm=ab.beta_norm(),
        converged=converged,
    )


def extended_channel_qfi(
    ch: ChannelFamily, pad: int = 0, opts: SolverOptions | None = None
) -> BoundReport:
    """Exact ancilla-assisted QFI of the channel: 4 min ||alpha(h)|| over all
    representations (beta unconstrained).

    For a tensor-power family the minimization runs over general, non-product
    representations of the N-fold channel. With ``pad > 0`` the minimization
    is repeated with zero-padded Kraus operators and the smaller value wins.
    """
    opts = opts or SolverOptions()
    pad = int(pad)
    if pad < 0:
        raise DomainError("pad must be >= 0")
    reports = []
    for z in sorted({0, pad}):
        h, converged = _solve_generator_program(ch, z, 1, False, opts)
        if h is None:
            g = KrausGenerator.zeros(ch.kraus_count + z)
            converged = False
        else:
            g = KrausGenerator(h)
        ab = alpha_beta(ch, g)
        reports.append(
            BoundReport(
                scheme="extended-exact",
                n=1,
                value=4 * ab.alpha_norm(),
                generator=g,
                residual_beta_norm=ab.beta_norm(),
                converged=converged,
            )
        )
    return min(reports, key=lambda rep: rep.value)


def simulation_bound(sigma: StateFamily, n: int) -> float:
    """N times the QFI of a channel-simulation resource family.

    A zero-derivative resource yields a vacuous bound of 0 (flagged with a
    warning): such a family cannot simulate a parameter-dependent channel.
    """
    n = _check_n(n)
    value = qfi_value(sigma)
    if value == 0.0:
        warnings.warn("simulation resource has zero QFI; the bound is vacuous")
    return n * value


def stationarity_residual(
    ch: ChannelFamily,
    g: KrausGenerator,
    beta0: bool = False,
    deg_tol: float = 1e-6,
) -> float:
    """Convexity certificate for the ||alpha|| minimizations.

    Returns the norm of the minimal subgradient of ||alpha(h)|| at ``g``,
    projected onto the beta = 0 tangent space when ``beta0`` is set. The
    subdifferential is spanned by the eigenvectors of the top eigenvalue
    cluster (within ``deg_tol`` relative); for a degenerate cluster the
    minimal-norm element is found by a small convex program.
    """
    ks, kds = _padded_ops(ch, g.size)
    r = len(ks)
    rot = _rotated_derivatives(ks, kds, g.h)
    alpha = sum(a.conj().T @ a for a in rot)
    lam, vec = np.linalg.eigh(alpha)
    top = lam[-1]
    cluster = np.where(lam >= top - deg_tol * max(1.0, top))[0]
    vc = vec[:, cluster]
    c = len(cluster)

    basis = _hermitian_basis(r)
    if beta0:
        e, _, _ = _constraint_matrix(ks, kds)
        proj = np.eye(len(basis)) - np.linalg.pinv(e) @ e
    else:
        proj = np.eye(len(basis))

    # d alpha / dh in direction H is -i sum_l H_kl K_l stacked against rot;
    # the subgradient under cluster weight P is g_m = -2 Im sum_lk H_lk F(P)_lk
    # with F(P)_lk = Tr(P~ K_l+ A_k).
    q_blocks = [[vc.conj().T @ ks[l].conj().T @ rot[k] @ vc for k in range(r)] for l in range(r)]
    if c == 1:
        f = np.array([[q_blocks[l][k][0, 0] for k in range(r)] for l in range(r)])
        grad = np.array([-2 * np.imag(np.sum(hm * f)) for hm in basis])
        return float(np.linalg.norm(proj @ grad))

    p = cp.Variable((c, c), hermitian=True)
    exprs = []
    for hm in basis:
        u = sum(hm[l, k] * q_blocks[l][k] for l in range(r) for k in range(r))
        exprs.append(-2 * cp.imag(cp.trace(p @ u)))
    grad_vec = proj @ cp.hstack(exprs)
    problem = cp.Problem(
        cp.Minimize(cp.norm(grad_vec)), [p >> 0, cp.trace(p) == 1]
    )
    problem.solve(solver="CLARABEL")
    return float(problem.value)
