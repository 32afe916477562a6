from fractions import Fraction

import numpy as np
import pandas as pd
import pytest

from algebra import PoleError, StepUnderflow, UsageError, gens
from config import NumericConfig
from numeric import checks
from numeric import (CLOSED_FORM_INITIAL, CLOSED_FORM_PARAMS, GENERIC_D6_INITIAL, AdaptiveIntegrator,
                     CompiledField, NumericMap, closed_form_check, closed_form_error,
                     compile_field, compile_functions, convergence_check, export_csv,
                     generic_d6_point, integral_drift, integral_drift_check, integrate,
                     round_trip_check, symmetry_commute_check)
from systems import build_system
from weyl import generator

x, t, a0 = gens("x t a0")


def test_compile_functions_needs_every_value():
    with pytest.raises(UsageError):
        compile_functions([x * a0], ("t", "x"), {})
    f = compile_functions([x * a0 + t], ("t", "x"), {"a0": Fraction(1, 2)})
    assert f(1.0, 4.0)[0] == pytest.approx(3.0)


def test_compiled_d6_field_matches_hand_evaluation(rng):
    params = generic_d6_point()
    field = compile_field(build_system("D6"), params)
    a = [float(v) for v in params]
    for _ in range(5):
        state = rng.normal(size=6) + 1j * rng.normal(size=6)
        t0 = float(rng.uniform(0.5, 3.0))
        xv, yv, zv, wv, qv, pv = state
        expected = (2 * xv**2 * yv + 2 * zv**2 * wv - xv**2 + (a[0] + a[1]) * xv
                    + 2 * a[3] * zv - 2 * pv + t0) / t0
        assert field(t0, state)[0] == pytest.approx(expected, rel=1e-12)


def test_closed_form_endpoint():
    assert closed_form_error() < 1e-8
    assert closed_form_check().passed


def test_closed_form_along_the_whole_path():
    trajectory = integrate("D6", CLOSED_FORM_PARAMS, CLOSED_FORM_INITIAL, 1.0, 4.0)
    error = np.abs(trajectory.component("x") - np.sqrt(trajectory.times))
    assert error.max() < 1e-8
    assert trajectory.system_id == "D6"
    assert trajectory.times[-1] == 4.0
    assert trajectory.accepted == len(trajectory.times) - 1


def test_backward_integration():
    # same solution read at s = 2
    start = (2, 0, 2, -1 / 16, 0.5, 0)
    trajectory = integrate("D6", CLOSED_FORM_PARAMS, start, 4.0, 1.0)
    assert abs(trajectory.final[0] - 1) < 1e-8


def test_rational_parameters_are_accepted():
    params = [Fraction(1, 4), 0, 0, Fraction(1, 4), 0, 0, Fraction(1, 4)]
    trajectory = integrate("D6", params, CLOSED_FORM_INITIAL, 1.0, 2.0)
    assert abs(trajectory.final[0] - np.sqrt(2)) < 1e-8


def test_input_errors():
    with pytest.raises(UsageError):
        integrate("D6", CLOSED_FORM_PARAMS, CLOSED_FORM_INITIAL[:5], 1.0, 2.0)
    with pytest.raises(UsageError):
        integrate("D6", CLOSED_FORM_PARAMS, CLOSED_FORM_INITIAL, 1.0, -1.0)
    with pytest.raises(UsageError):
        integrate("D6", CLOSED_FORM_PARAMS, CLOSED_FORM_INITIAL, 0.0, 1.0)
    with pytest.raises(UsageError):
        integrate("D6", (0.3,) * 7, CLOSED_FORM_INITIAL, 1.0, 2.0)
    with pytest.raises(UsageError):
        NumericConfig(MIN_STEP=1.0, MAX_STEP=0.1).validate()


def test_step_budget_is_enforced():
    with pytest.raises(StepUnderflow) as info:
        integrate("D6", CLOSED_FORM_PARAMS, CLOSED_FORM_INITIAL, 1.0, 4.0,
                  NumericConfig(MAX_STEPS=3))
    assert info.value.t is not None


def test_blow_up_is_reported():
    # u' = u**2 from u(0) = 1 blows up at t = 1
    field = CompiledField(("u",), lambda t, u: np.array([u * u]),
                          lambda t, u: np.array([1 / u]))
    with pytest.raises((PoleError, StepUnderflow)):
        AdaptiveIntegrator(field).run(0.0, 2.0, [1.0])


def test_empty_interval():
    trajectory = integrate("D6", CLOSED_FORM_PARAMS, CLOSED_FORM_INITIAL, 1.0, 1.0)
    assert trajectory.accepted == 0
    assert len(trajectory.times) == 1


def test_integral_drift():
    drift, trajectory = integral_drift("H4", (Fraction(1, 3),), (0.3 + 0.1j, 0.2), 1.0, 10.0)
    assert drift < 1e-8
    assert len(trajectory.monitored) == len(trajectory.times)
    assert integral_drift_check("K5", (Fraction(2, 5),), (0.1, 0.1 - 0.05j), 1.0, 10.0).passed
    with pytest.raises(UsageError):
        integral_drift("D6", CLOSED_FORM_PARAMS, CLOSED_FORM_INITIAL, 1.0, 2.0)


def test_export_csv(tmp_path):
    trajectory = integrate("D6", CLOSED_FORM_PARAMS, CLOSED_FORM_INITIAL, 1.0, 2.0)
    path = export_csv(trajectory, str(tmp_path / "run.csv"))
    frame = pd.read_csv(path)
    assert list(frame.columns[:5]) == ["t", "x_re", "x_im", "y_re", "y_im"]
    assert len(frame.columns) == 13
    assert len(frame) == trajectory.accepted + 1
    assert frame["t"].iloc[-1] == pytest.approx(2.0)


def test_numeric_map_reverses_time():
    g = NumericMap(generator("D6", "pi3"))
    params = [complex(v) for v in generic_d6_point()]
    new_t, state, new_params = g(2.0, np.asarray(GENERIC_D6_INITIAL), params)
    assert new_t == -2.0
    assert state[5] == pytest.approx(GENERIC_D6_INITIAL[5] - 2.0)
    assert new_params[5] == pytest.approx(params[6])


@pytest.mark.parametrize("name", ["s0", "s2", "s4", "pi1"])
def test_symmetries_commute_with_the_flow(name):
    record = symmetry_commute_check("D6", name, generic_d6_point(), GENERIC_D6_INITIAL, 1.0, 1.3)
    assert record.passed, record.detail


def test_time_reversing_symmetry_commutes_with_the_flow():
    record = symmetry_commute_check("D6", "pi3", generic_d6_point(), GENERIC_D6_INITIAL, 1.0, 1.3)
    assert record.passed, record.detail


def test_round_trip():
    assert round_trip_check("D6", generic_d6_point(), GENERIC_D6_INITIAL, 1.0, 1.5).passed


def test_round_trip_bound_is_ten_times_tolerance():
    record = round_trip_check("D6", generic_d6_point(), GENERIC_D6_INITIAL, 1.0, 1.5)
    assert record.passed, record.detail
    assert record.detail["bound"] == pytest.approx(1e-9)


def test_round_trip_bound_tracks_tolerance():
    config = NumericConfig().with_tolerance(1e-8)
    record = round_trip_check("D6", generic_d6_point(), GENERIC_D6_INITIAL, 1.0, 1.5, config)
    assert record.detail["bound"] == pytest.approx(1e-7)


def test_tighter_tolerance_helps():
    record = convergence_check()
    assert record.passed, record.detail
    assert record.detail["ratio"] >= NumericConfig().ORDER_FACTOR


def _stub_errors(monkeypatch, *errors):
    values = iter(errors)
    monkeypatch.setattr(checks, "closed_form_error", lambda *args, **kwargs: next(values))


def test_marginal_improvement_is_not_convergence(monkeypatch):
    _stub_errors(monkeypatch, 1.0e-7, 0.99e-7)
    record = convergence_check()
    assert not record.passed
    assert "ratio 1.01" in record.witness


def test_order_factor_improvement_is_convergence(monkeypatch):
    _stub_errors(monkeypatch, 1.0e-7, 3.0e-8)
    assert convergence_check().passed


def test_round_off_errors_count_as_converged(monkeypatch):
    _stub_errors(monkeypatch, 5e-14, 6e-14)
    assert convergence_check().passed


def test_order_factor_must_exceed_one():
    with pytest.raises(UsageError):
        NumericConfig(ORDER_FACTOR=1.0).validate()


def test_with_tolerance_keeps_other_settings():
    config = NumericConfig(MAX_STEP=0.1, ORDER_FACTOR=3.0).with_tolerance(1e-6)
    assert config.REL_TOL == 1e-6
    assert config.ABS_TOL == pytest.approx(1e-8)
    assert (config.MAX_STEP, config.ORDER_FACTOR) == (0.1, 3.0)
