"""QFI and metrology precision bounds for noisy phase-estimation channels."""

from .bounds import (
    AlphaBeta,
    BoundReport,
    KrausGenerator,
    SolverOptions,
    alpha_beta,
    beta0_feasible_generator,
    extended_channel_qfi,
    finite_n_bound_adaptive,
    finite_n_bound_parallel,
    minimize_beta0,
    minimize_finite_adaptive,
    minimize_finite_parallel,
    simulation_bound,
    stationarity_residual,
)
from .channels import (
    DIM_CAP,
    MODELS,
    TP_TOL,
    ChannelFamily,
    PhaseUnitary,
    apply,
    compose,
    compress,
    make_amplitude_damping,
    make_channel,
    make_dephasing,
    make_erasure,
    phase_unitary,
    tensor_power,
)
from .exceptions import (
    ConstraintError,
    DimensionError,
    DomainError,
    NumericError,
    QmetroError,
    ResourceError,
)
from .linalg import (
    HermitianEigensystem,
    hermitian_eigensystem,
    operator_norm,
    partial_trace,
    tensor_product,
)
from .qfi import (
    SeesawOptions,
    SeesawResult,
    StateFamily,
    optimize_input,
    qfi_pure,
    qfi_value,
    sld,
)
from .strategies import (
    StrategyPoint,
    adaptive_ceiling,
    figure4_table,
    knysh_bound,
    parallel_qfi,
    ratio_curve,
    sequential_closed_form,
    sequential_numeric,
    universal_bound,
)

__version__ = "0.1.0"
