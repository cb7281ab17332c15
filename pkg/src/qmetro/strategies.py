"""Scheme-level evaluators: sequential, parallel-entangled and
ancilla-assisted phase estimation under the three noise models.

Scheme tags used throughout:

* ``i``         sequential, single probes through n channels in a row,
* ``ii``        entangled probes through N parallel channels,
* ``iii``       entangled probes plus a noiseless ancilla,
* ``iv-bound``  ceiling for adaptive (feedback) strategies,
* ``knysh``     asymptotically tight no-ancilla ceiling N eta / (1 - eta),
* ``universal`` the ancilla-inclusive ceiling 4 N eta / (1 - eta).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import bounds, qfi
from .channels import ChannelFamily, compose, compress, make_channel, tensor_power
from .exceptions import DomainError

VALID_METHODS = {
    "i": ("closed-form", "seesaw"),
    "ii": ("seesaw",),
    "iii": ("seesaw", "kraus-min"),
    "iv-bound": ("formula",),
    "knysh": ("formula",),
    "universal": ("formula",),
}


@dataclass(frozen=True)
class StrategyPoint:
    model: str
    eta: float
    n: int
    scheme: str
    value: float
    method: str

    def __post_init__(self):
        if self.scheme not in VALID_METHODS:
            raise DomainError(f"unknown scheme {self.scheme!r}")
        if self.method not in VALID_METHODS[self.scheme]:
            raise DomainError(
                f"method {self.method!r} is not valid for scheme {self.scheme!r}"
            )
        if self.value < 0:
            raise DomainError("QFI values are non-negative")


def _check_eta_open(eta: float) -> float:
    eta = float(eta)
    if not 0.0 < eta <= 1.0:
        raise DomainError("eta must lie in (0, 1]")
    return eta


def _sequential_continuous(eta: float, n_total: int) -> float:
    """Sequential QFI at the continuous optimum of the block length."""
    return n_total / (np.e * np.log(1 / eta))


def sequential_closed_form(eta: float, n_total: int) -> float:
    """Closed-form sequential QFI, piecewise in eta.

    A block of n sequential channels scores (N/n) n^2 eta^n; the optimal
    continuous block length is 1/ln(1/eta), clamped to [1, N]:

    * eta < 1/e:             n = 1,  F = N eta
    * 1/e <= eta <= e^(-1/N): n = 1/ln(1/eta),  F = N / (e ln(1/eta))
    * eta > e^(-1/N):         n = N,  F = N^2 eta^N

    eta = 1 is noiseless and returns N^2.
    """
    eta = _check_eta_open(eta)
    n_total = int(n_total)
    if n_total < 1:
        raise DomainError("probe count N must be >= 1")
    if eta == 1.0:
        return float(n_total**2)
    if eta < np.exp(-1.0):
        return n_total * eta
    if eta > np.exp(-1.0 / n_total):
        return float(n_total**2 * eta**n_total)
    return _sequential_continuous(eta, n_total)


def sequential_numeric(
    ch: ChannelFamily, n_total: int, opts: qfi.SeesawOptions | None = None
) -> tuple[float, int]:
    """Best sequential strategy over integer block lengths.

    For each n in 1..N the channel is self-composed n times (with Kraus
    compression after every step), the single-block QFI is maximized by
    see-saw, and the block value is weighted by the real multiplier N/n.
    Returns the best value and the best block length.
    """
    n_total = int(n_total)
    if n_total < 1:
        raise DomainError("probe count N must be >= 1")
    opts = opts or qfi.SeesawOptions()
    best, best_n = -np.inf, 1
    composed = ch
    for n in range(1, n_total + 1):
        if n > 1:
            composed = compress(compose(composed, ch))
        result = qfi.optimize_input(composed, ancilla_dim=1, opts=opts)
        value = (n_total / n) * result.qfi
        if value > best:
            best, best_n = value, n
    return best, best_n


def knysh_bound(eta: float, n: int) -> float:
    """Asymptotically tight ceiling for no-ancilla parallel strategies
    under amplitude damping: N eta / (1 - eta). Consumed as a formula."""
    eta = _check_eta_strict(eta)
    return int(n) * eta / (1 - eta)


def universal_bound(eta: float, n: int) -> float:
    """Ceiling for all ancilla-assisted strategies: 4 N eta / (1 - eta)."""
    eta = _check_eta_strict(eta)
    return 4 * int(n) * eta / (1 - eta)


def _check_eta_strict(eta: float) -> float:
    eta = float(eta)
    if not 0.0 < eta < 1.0:
        raise DomainError("eta must lie in (0, 1) for asymptotic bounds")
    return eta


def parallel_qfi(
    model: str,
    eta: float,
    n: int,
    ancilla: bool,
    method: str = "seesaw",
    opts: qfi.SeesawOptions | None = None,
    solver_opts: bounds.SolverOptions | None = None,
) -> StrategyPoint:
    """QFI of scheme (ii) or (iii) for N parallel channels.

    ``method='seesaw'`` optimizes the input state directly (the ancilla
    dimension defaults to the Kraus count of the N-fold channel);
    ``method='kraus-min'`` (scheme iii only) evaluates the exact
    ancilla-assisted value by representation minimization.
    """
    ch = tensor_power(make_channel(model, eta), int(n))
    scheme = "iii" if ancilla else "ii"
    if method == "kraus-min":
        if not ancilla:
            raise DomainError("kraus-min computes the ancilla-assisted value")
        report = bounds.extended_channel_qfi(ch, opts=solver_opts)
        return StrategyPoint(model, float(eta), int(n), scheme, report.value, "kraus-min")
    ancilla_dim = ch.kraus_count if ancilla else 1
    result = qfi.optimize_input(ch, ancilla_dim=ancilla_dim, opts=opts)
    return StrategyPoint(model, float(eta), int(n), scheme, result.qfi, "seesaw")


def adaptive_ceiling(
    model: str,
    eta: float,
    n: int,
    pad: int = 0,
    solver_opts: bounds.SolverOptions | None = None,
) -> StrategyPoint:
    """Finite-N ceiling for adaptive (feedback) strategies, scheme (iv)."""
    ch = make_channel(model, eta)
    report = bounds.minimize_finite_adaptive(ch, int(n), pad=pad, opts=solver_opts)
    return StrategyPoint(model, float(eta), int(n), "iv-bound", report.value, "formula")


def ratio_curve(model: str, eta_grid) -> list[tuple]:
    """Asymptotic advantage of entangled over sequential strategies.

    For every grid point the ratio of the per-probe asymptotic parallel
    bound to the continuous-optimum sequential formula is emitted; it is
    N-independent and equals e * eta * ln(1/eta) / (1 - eta). For
    amplitude damping each row also carries the ancilla-assisted ceiling,
    a factor 4 above.
    """
    if model not in ("dephasing", "erasure", "amplitude-damping"):
        raise DomainError(f"unknown model {model!r}")
    rows = []
    for eta in eta_grid:
        eta = _check_eta_strict(eta)
        ratio = knysh_bound(eta, 1) / _sequential_continuous(eta, 1)
        if model == "amplitude-damping":
            rows.append((eta, ratio, 4 * ratio))
        else:
            rows.append((eta, ratio))
    return rows


def figure4_table(
    eta: float,
    n_max: int,
    opts: qfi.SeesawOptions | None = None,
    solver_opts: bounds.SolverOptions | None = None,
) -> list[StrategyPoint]:
    """Amplitude-damping comparison of strategies (ii) and (iii) with their
    ceilings for N = 1..n_max."""
    eta = _check_eta_strict(eta)
    n_max = int(n_max)
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    points = []
    model = "amplitude-damping"
    for n in range(1, n_max + 1):
        ch = tensor_power(make_channel(model, eta), n)
        f_ii = qfi.optimize_input(ch, ancilla_dim=1, opts=opts).qfi
        f_iii = bounds.extended_channel_qfi(ch, opts=solver_opts).value
        points.append(StrategyPoint(model, eta, n, "ii", f_ii, "seesaw"))
        points.append(StrategyPoint(model, eta, n, "iii", f_iii, "kraus-min"))
        points.append(StrategyPoint(model, eta, n, "knysh", knysh_bound(eta, n), "formula"))
        points.append(
            StrategyPoint(model, eta, n, "universal", universal_bound(eta, n), "formula")
        )
    return points
