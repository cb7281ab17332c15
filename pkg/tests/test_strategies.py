import numpy as np
import pytest

from qmetro import (
    DomainError,
    SeesawOptions,
    StrategyPoint,
    adaptive_ceiling,
    figure4_table,
    knysh_bound,
    make_amplitude_damping,
    make_dephasing,
    minimize_beta0,
    make_channel,
    parallel_qfi,
    ratio_curve,
    sequential_closed_form,
    sequential_numeric,
    universal_bound,
)

FAST = SeesawOptions(restarts=6)


def test_closed_form_branches():
    # below 1/e the single-pass branch applies
    assert sequential_closed_form(0.2, 10) == 10 * 0.2
    # above e^(-1/N) the all-sequential branch applies
    assert sequential_closed_form(0.99, 3) == 3**2 * 0.99**3
    # the middle branch
    assert sequential_closed_form(0.5, 100) == pytest.approx(100 / (np.e * np.log(2)))
    assert sequential_closed_form(1.0, 7) == 49.0


def test_closed_form_continuity():
    n = 40
    # at eta = 1/e the single-pass and continuous-optimum branches agree
    eta_low = np.exp(-1.0)
    lower, middle = n * eta_low, n / (np.e * np.log(1 / eta_low))
    assert abs(lower - middle) <= 1e-9
    assert abs(sequential_closed_form(eta_low, n) - n / np.e) <= 1e-9
    # at eta = e^(-1/N) the continuous optimum meets the all-sequential branch
    eta_high = np.exp(-1.0 / n)
    middle = n / (np.e * np.log(1 / eta_high))
    upper = n**2 * eta_high**n
    assert abs(middle - upper) <= 1e-9
    assert abs(sequential_closed_form(eta_high, n) - upper) <= 1e-9


def test_closed_form_domain():
    with pytest.raises(DomainError):
        sequential_closed_form(0.0, 5)
    with pytest.raises(DomainError):
        sequential_closed_form(1.2, 5)
    with pytest.raises(DomainError):
        sequential_closed_form(0.5, 0)


def test_knysh_bound_values():
    assert knysh_bound(0.5, 4) == pytest.approx(4.0)
    assert knysh_bound(0.5, 8) == pytest.approx(8.0)
    for n in (1, 3, 17):
        assert knysh_bound(0.3, n) / n == pytest.approx(0.3 / 0.7)
    assert universal_bound(0.5, 4) == pytest.approx(16.0)


def test_knysh_matches_asymptotic_minimization():
    """The formula coincides with the dephasing/erasure per-probe minimum."""
    for model in ("dephasing", "erasure"):
        for eta in (0.3, 0.6):
            report = minimize_beta0(make_channel(model, eta))
            assert knysh_bound(eta, 1) == pytest.approx(report.value, rel=1e-6)


def test_ratio_curve_formula():
    grid = np.linspace(0.05, 0.95, 19)
    rows = ratio_curve("dephasing", grid)
    for eta, ratio in rows:
        expected = np.e * eta * np.log(1 / eta) / (1 - eta)
        assert abs(ratio - expected) <= 1e-12


def test_ratio_curve_known_points():
    (_, at_half), = ratio_curve("erasure", [0.5])
    assert at_half == pytest.approx(np.e * np.log(2), abs=1e-12)
    (_, at_inv_e), = ratio_curve("erasure", [np.exp(-1.0)])
    assert at_inv_e == pytest.approx(np.e * np.exp(-1) / (1 - np.exp(-1)), abs=1e-12)
    (_, limit), = ratio_curve("dephasing", [0.999])
    assert limit == pytest.approx(np.e, rel=0.01)


def test_ratio_curve_amplitude_damping_ceiling():
    rows = ratio_curve("amplitude-damping", [0.3, 0.7])
    for eta, ratio, ceiling in rows:
        assert ceiling == pytest.approx(4 * ratio)


def test_ratio_curve_domain():
    with pytest.raises(DomainError):
        ratio_curve("dephasing", [0.5, 1.0])
    with pytest.raises(DomainError):
        ratio_curve("squeezing", [0.5])


def test_sequential_numeric_noiseless_heisenberg():
    value, best_n = sequential_numeric(make_dephasing(1.0), 4, opts=FAST)
    assert best_n == 4
    assert value == pytest.approx(16.0, rel=1e-9)


def test_sequential_numeric_matches_block_formula():
    eta, n_total = 0.9, 5
    value, best_n = sequential_numeric(make_dephasing(eta), n_total, opts=FAST)
    scores = [n_total * n * eta**n for n in range(1, n_total + 1)]
    assert value == pytest.approx(max(scores), rel=1e-8)
    assert best_n == int(np.argmax(scores)) + 1


def test_parallel_qfi_single_probe_both_methods():
    seesaw = parallel_qfi("dephasing", 0.8, 1, ancilla=False, opts=FAST)
    assert seesaw.value == pytest.approx(0.8, abs=1e-8)
    assert (seesaw.scheme, seesaw.method) == ("ii", "seesaw")
    kraus_min = parallel_qfi("dephasing", 0.8, 1, ancilla=True, method="kraus-min")
    assert kraus_min.value == pytest.approx(0.8, rel=2e-3)
    assert (kraus_min.scheme, kraus_min.method) == ("iii", "kraus-min")
    with pytest.raises(DomainError):
        parallel_qfi("dephasing", 0.8, 1, ancilla=False, method="kraus-min")


def test_parallel_qfi_erasure_ancillas_useless():
    plain = parallel_qfi("erasure", 0.5, 2, ancilla=False, opts=FAST)
    assisted = parallel_qfi("erasure", 0.5, 2, ancilla=True, opts=FAST)
    assert assisted.value == pytest.approx(plain.value, rel=2e-3)


@pytest.mark.parametrize("n", [2, 3])
def test_parallel_qfi_dephasing_ancillas_useless(n):
    plain = parallel_qfi("dephasing", 0.6, n, ancilla=False, opts=FAST)
    assisted = parallel_qfi("dephasing", 0.6, n, ancilla=True, opts=FAST)
    assert assisted.value == pytest.approx(plain.value, rel=2e-3)


def test_adaptive_ceiling_point():
    point = adaptive_ceiling("amplitude-damping", 0.5, 3)
    assert (point.scheme, point.method) == ("iv-bound", "formula")
    assert point.value >= knysh_bound(0.5, 3)


def test_figure4_rows_n1():
    points = figure4_table(0.5, 1, opts=FAST)
    values = {p.scheme: p.value for p in points}
    assert values["ii"] == pytest.approx(0.5, abs=1e-8)
    assert values["iii"] == pytest.approx(4 * 0.5 / (1 + np.sqrt(0.5)) ** 2, rel=1e-6)
    assert values["iii"] < values["knysh"] == pytest.approx(1.0)
    assert values["universal"] == pytest.approx(4.0)


def test_figure4_threshold_eta_03():
    points = figure4_table(0.3, 1, opts=FAST)
    values = {p.scheme: p.value for p in points}
    assert values["iii"] == pytest.approx(0.5009507, rel=1e-5)
    assert values["iii"] > values["knysh"] == pytest.approx(0.3 / 0.7)


def test_strategy_point_validation():
    with pytest.raises(DomainError):
        StrategyPoint("dephasing", 0.5, 1, "v", 1.0, "formula")
    with pytest.raises(DomainError):
        StrategyPoint("dephasing", 0.5, 1, "ii", 1.0, "closed-form")
    with pytest.raises(DomainError):
        StrategyPoint("dephasing", 0.5, 1, "ii", -1.0, "seesaw")
