"""Command-line front end.

Subcommands construct the noise models, run the requested computation and
emit CSV or JSON. Data goes to stdout unless ``--out`` is given; errors go
to stderr. Exit codes: 0 success, 2 domain error, 3 resource cap exceeded,
4 non-convergence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import bounds, qfi, strategies
from .channels import MODELS, make_channel, tensor_power
from .exceptions import (
    ConstraintError,
    DimensionError,
    DomainError,
    NumericError,
    ResourceError,
)

DEFAULT_SEED = 7

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_RESOURCE = 3
EXIT_NO_CONVERGENCE = 4

FIG3_COLUMNS = ("eta", "ratio_deph_erasure", "ratio_ampdamp_ceiling")
FIG4_COLUMNS = ("N", "f_ii", "f_iii", "knysh", "universal")


@dataclass(frozen=True)
class RunConfig:
    command: str
    model: str | None = None
    eta: float | None = None
    eta_min: float | None = None
    eta_max: float | None = None
    points: int | None = None
    n: int | None = None
    n_max: int | None = None
    scheme: str | None = None
    ancilla: bool = False
    restarts: int = 20
    tol: float = 1e-10
    pad: int = 0
    seed: int = DEFAULT_SEED
    format: str = "csv"
    out: str | None = None
    sigma: str | None = None


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _emit(config: RunConfig, header, rows, results_json) -> None:
    if config.format == "json":
        payload = {"config": asdict(config), "results": results_json}
        text = json.dumps(payload, indent=2)
    else:
        lines = [",".join(header)]
        lines += [",".join(_fmt(x) for x in row) for row in rows]
        text = "\n".join(lines) + "\n"
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _seesaw_opts(config: RunConfig) -> qfi.SeesawOptions:
    return qfi.SeesawOptions(restarts=config.restarts, tol=config.tol, seed=config.seed)


def _point_row(p: strategies.StrategyPoint):
    return (p.model, p.eta, p.n, p.scheme, p.method, p.value)


def _point_json(p: strategies.StrategyPoint):
    return {
        "model": p.model,
        "eta": p.eta,
        "N": p.n,
        "scheme": p.scheme,
        "method": p.method,
        "value": p.value,
    }


def cmd_qfi(config: RunConfig) -> int:
    model, eta, n = config.model, config.eta, config.n or 1
    opts = _seesaw_opts(config)
    if config.scheme == "i":
        value, best_n = strategies.sequential_numeric(make_channel(model, eta), n, opts)
        point = strategies.StrategyPoint(model, eta, n, "i", value, "seesaw")
        converged = True
    elif config.scheme in ("ii", "iii"):
        ancilla = config.scheme == "iii" or config.ancilla
        ch = tensor_power(make_channel(model, eta), n)
        ancilla_dim = ch.kraus_count if ancilla else 1
        result = qfi.optimize_input(ch, ancilla_dim=ancilla_dim, opts=opts)
        point = strategies.StrategyPoint(
            model, eta, n, "iii" if ancilla else "ii", result.qfi, "seesaw"
        )
        converged = result.converged
    else:
        raise DomainError(f"scheme must be one of i, ii, iii (got {config.scheme!r})")
    header = ("model", "eta", "N", "scheme", "method", "value")
    _emit(config, header, [_point_row(point)], [_point_json(point)])
    return EXIT_OK if converged else EXIT_NO_CONVERGENCE


def _load_sigma(path: str) -> qfi.StateFamily:
    with open(path) as fh:
        data = json.load(fh)
    try:
        rho = np.asarray(data["rho"]["re"]) + 1j * np.asarray(data["rho"]["im"])
        dot = np.asarray(data["rho_dot"]["re"]) + 1j * np.asarray(data["rho_dot"]["im"])
    except KeyError as exc:
        raise DomainError(f"sigma file is missing key {exc}") from None
    return qfi.StateFamily(rho, dot)


def _report_json(rep: bounds.BoundReport):
    return {
        "scheme": rep.scheme,
        "N": rep.n,
        "value": rep.value,
        "residual_beta_norm": rep.residual_beta_norm,
        "converged": rep.converged,
        "generator": {
            "re": rep.generator.h.real.tolist(),
            "im": rep.generator.h.imag.tolist(),
        },
    }


def cmd_bound(config: RunConfig) -> int:
    n = config.n or 1
    solver_opts = bounds.SolverOptions()
    if config.scheme == "simulation":
        if not config.sigma:
            raise DomainError("--scheme simulation requires --sigma FILE")
        sigma = _load_sigma(config.sigma)
        value = bounds.simulation_bound(sigma, n)
        header = ("scheme", "N", "value")
        _emit(
            config,
            header,
            [("simulation", n, value)],
            [{"scheme": "simulation", "N": n, "value": value}],
        )
        return EXIT_OK

    ch = make_channel(config.model, config.eta)
    if config.scheme == "asymptotic-beta0":
        report = bounds.minimize_beta0(ch, pad=config.pad, opts=solver_opts)
    elif config.scheme == "finite-par":
        report = bounds.minimize_finite_parallel(ch, n, pad=config.pad, opts=solver_opts)
    elif config.scheme == "finite-adaptive":
        report = bounds.minimize_finite_adaptive(ch, n, pad=config.pad, opts=solver_opts)
    elif config.scheme == "extended-exact":
        ch_n = tensor_power(ch, n)
        report = bounds.extended_channel_qfi(ch_n, pad=config.pad, opts=solver_opts)
    else:
        raise DomainError(f"unknown bound scheme {config.scheme!r}")
    header = ("scheme", "N", "value", "residual_beta_norm", "converged")
    row = (report.scheme, report.n, report.value, report.residual_beta_norm, report.converged)
    _emit(config, header, [row], [_report_json(report)])
    return EXIT_OK if report.converged else EXIT_NO_CONVERGENCE


def _eta_grid(config: RunConfig):
    if config.eta_min is not None or config.eta_max is not None:
        lo = config.eta_min if config.eta_min is not None else 0.01
        hi = config.eta_max if config.eta_max is not None else 0.99
        pts = config.points or 99
        return list(np.linspace(lo, hi, pts))
    # default grid 0.01..0.99 plus the near-noiseless limit point
    return list(np.linspace(0.01, 0.99, config.points or 99)) + [0.999]


def cmd_fig3(config: RunConfig) -> int:
    grid = _eta_grid(config)
    plain = strategies.ratio_curve("dephasing", grid)
    ceiling = strategies.ratio_curve("amplitude-damping", grid)
    rows = [
        (eta, ratio, amp_ceiling)
        for (eta, ratio), (_, _, amp_ceiling) in zip(plain, ceiling)
    ]
    results = [dict(zip(FIG3_COLUMNS, row)) for row in rows]
    _emit(config, FIG3_COLUMNS, rows, results)
    return EXIT_OK


def cmd_fig4(config: RunConfig) -> int:
    eta = config.eta if config.eta is not None else 0.5
    n_max = config.n_max or 4
    opts = _seesaw_opts(config)
    points = strategies.figure4_table(eta, n_max, opts=opts)
    by_n = {}
    for p in points:
        by_n.setdefault(p.n, {})[p.scheme] = p.value
    rows = [
        (n, vals["ii"], vals["iii"], vals["knysh"], vals["universal"])
        for n, vals in sorted(by_n.items())
    ]
    results = [dict(zip(FIG4_COLUMNS, row)) for row in rows]
    _emit(config, FIG4_COLUMNS, rows, results)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmetro",
        description="QFI and precision bounds for noisy phase estimation channels",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, schemes=None):
        p.add_argument("--model", choices=MODELS)
        p.add_argument("--eta", type=float)
        p.add_argument("--eta-min", type=float, dest="eta_min")
        p.add_argument("--eta-max", type=float, dest="eta_max")
        p.add_argument("--points", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--n-max", type=int, dest="n_max")
        if schemes:
            p.add_argument("--scheme", choices=schemes)
        p.add_argument("--ancilla", action="store_true")
        p.add_argument("--restarts", type=int, default=20)
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--pad", type=int, default=0)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out")
        p.add_argument("--sigma", help="JSON file with a simulation resource family")

    common(sub.add_parser("qfi", help="optimize the QFI of a scheme"), ("i", "ii", "iii"))
    common(sub.add_parser("bound", help="evaluate a representation bound"), bounds.SCHEMES)
    common(sub.add_parser("fig3", help="ratio-curve sweep CSV"))
    common(sub.add_parser("fig4", help="strategy-comparison table CSV"))
    return parser


def _to_config(args: argparse.Namespace) -> RunConfig:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("QMETRO_SEED", DEFAULT_SEED))
    return RunConfig(
        command=args.command,
        model=getattr(args, "model", None),
        eta=args.eta,
        eta_min=args.eta_min,
        eta_max=args.eta_max,
        points=args.points,
        n=args.n,
        n_max=args.n_max,
        scheme=getattr(args, "scheme", None),
        ancilla=args.ancilla,
        restarts=args.restarts,
        tol=args.tol,
        pad=args.pad,
        seed=seed,
        format=args.format,
        out=args.out,
        sigma=args.sigma,
    )


_COMMANDS = {"qfi": cmd_qfi, "bound": cmd_bound, "fig3": cmd_fig3, "fig4": cmd_fig4}


def _require(config: RunConfig, *fields) -> None:
    for name in fields:
        if getattr(config, name) is None:
            raise DomainError(f"--{name.replace('_', '-')} is required for {config.command}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = _to_config(args)
    try:
        if config.command in ("qfi", "bound") and config.scheme is None:
            raise DomainError("--scheme is required")
        if config.command == "qfi":
            _require(config, "model", "eta")
        if config.command == "bound" and config.scheme != "simulation":
            _require(config, "model", "eta")
        return _COMMANDS[config.command](config)
    except (DomainError, DimensionError, NumericError, ConstraintError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
