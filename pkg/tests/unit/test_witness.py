import numpy as np
import pandas as pd
import pytest

from bellwit import (
    BoundKind,
    CorrelationTensor,
    Family,
    Verdict,
    build_cosine_tensor,
    build_parity_tensor,
    certify,
    flip_visibility,
    simulate_noisy_ghz,
    sweep,
    threshold_visibility
)
from bellwit import exceptions
from bellwit.witness import _threshold


def test_mermin_threshold(mermin):
    assert threshold_visibility(mermin) == pytest.approx(1 / np.sqrt(2), abs=1e-9)


def test_bancal_threshold(bancal):
    assert threshold_visibility(bancal) == pytest.approx(2 / 3, abs=1e-9)


def test_parity_threshold(parity4):
    assert threshold_visibility(parity4) == pytest.approx(0.65328, abs=1e-5)


def test_parity_threshold_needs_power_of_two():
    with pytest.raises(exceptions.ClosedFormNotAvailableError):
        threshold_visibility(build_parity_tensor(3))


def test_custom_threshold(custom3):
    with pytest.raises(exceptions.UnsupportedFamilyError):
        threshold_visibility(custom3)


def test_large_m_threshold_approaches_two_over_pi():
    assert threshold_visibility(build_cosine_tensor(2)) > 2 / np.pi
    table = sweep(Family.COSINE, (10 ** 6, 10 ** 6))
    assert table["V_threshold"].iloc[0] == pytest.approx(2 / np.pi, abs=1e-10)


def test_threshold_never_below_two_over_pi():
    m = np.arange(2, 10 ** 6 + 1, dtype=float)
    assert np.all(m * np.sin(np.pi / (2 * m)) <= np.pi / 2)
    assert np.all(_threshold(m) >= 2 / np.pi)


@pytest.mark.parametrize("m", [2, 4, 8, 16])
def test_cosine_and_parity_thresholds_agree(m):
    cosine = threshold_visibility(build_cosine_tensor(m))
    parity = threshold_visibility(build_parity_tensor(m))
    assert parity == pytest.approx(cosine, abs=1e-12)


def test_certify_mermin_pure_ghz(mermin):
    result = certify(mermin, simulate_noisy_ghz(mermin, 1.0))
    assert result.verdict is Verdict.GENUINE_TRIPARTITE_ENTANGLEMENT
    assert result.bound_kind is BoundKind.CLOSED
    assert result.bell_value == pytest.approx(4.0, abs=1e-9)
    assert result.margin == pytest.approx(4.0 - 2 * np.sqrt(2), abs=1e-9)
    assert result.ns_violation is False


def test_certify_bancal_noisy(bancal):
    result = certify(bancal, simulate_noisy_ghz(bancal, 0.70))
    assert result.bell_value == pytest.approx(9.45, abs=1e-9)
    assert result.verdict is Verdict.GENUINE_TRIPARTITE_ENTANGLEMENT


def test_certify_below_threshold(bancal):
    result = certify(bancal, simulate_noisy_ghz(bancal, 0.6))
    assert result.verdict is Verdict.INCONCLUSIVE
    assert result.margin < 0


def test_certify_exactly_at_bound_is_inconclusive(bancal):
    result = certify(bancal, simulate_noisy_ghz(bancal, 2 / 3))
    assert abs(result.margin) < 1e-9
    assert result.verdict is Verdict.INCONCLUSIVE


def test_certify_tolerance(bancal):
    data = simulate_noisy_ghz(bancal, 0.70)
    assert certify(bancal, data, tol=0.5).verdict is Verdict.INCONCLUSIVE
    with pytest.raises(exceptions.InvalidParameterError):
        certify(bancal, data, tol=-1.0)


def test_certify_no_signalling_violation(mermin):
    data = CorrelationTensor(m=2, values=np.sign(mermin.coeffs))
    assert certify(mermin, data).ns_violation is False
    # unvalidated, out of range
    values = 1.5 * np.sign(mermin.coeffs)
    with pytest.raises(exceptions.InvalidDataError):
        certify(mermin, CorrelationTensor.model_construct(m=2, values=values))


def test_certify_odd_parity_uses_bruteforce():
    t = build_parity_tensor(3)
    result = certify(t, simulate_noisy_ghz(t, 1.0))
    assert result.bound_kind is BoundKind.BRUTEFORCE
    assert result.bisep_bound == pytest.approx(9.0, abs=1e-9)
    assert result.verdict is Verdict.INCONCLUSIVE


def test_certify_custom(custom3, threaded_compute):
    data = CorrelationTensor(m=3, values=np.zeros((3, 3, 3)))
    result = certify(custom3, data, compute=threaded_compute)
    assert result.bound_kind is BoundKind.BRUTEFORCE
    assert result.bell_value == 0.0
    assert result.verdict is Verdict.INCONCLUSIVE


def test_certify_dimension_mismatch(bancal):
    with pytest.raises(exceptions.DimensionMismatchError):
        certify(bancal, CorrelationTensor(m=2, values=np.zeros((2, 2, 2))))


@pytest.mark.parametrize("m", range(2, 7))
def test_flip_point_matches_threshold(m):
    t = build_cosine_tensor(m)
    assert flip_visibility(t) == pytest.approx(threshold_visibility(t), abs=1e-8)


def test_flip_point_none_when_never_certified():
    assert flip_visibility(build_parity_tensor(3)) is None


@pytest.mark.parametrize("m", range(2, 7))
def test_verdict_monotone_in_visibility(m):
    t = build_cosine_tensor(m)
    certified = [
        certify(t, simulate_noisy_ghz(t, V)).verdict is Verdict.GENUINE_TRIPARTITE_ENTANGLEMENT
        for V in np.linspace(0.0, 1.0, 41)
    ]
    first = certified.index(True)
    assert all(certified[first:]) is True
    assert any(certified[:first]) is False


def test_simulate_invalid_visibility(bancal):
    with pytest.raises(exceptions.InvalidParameterError):
        simulate_noisy_ghz(bancal, 1.2)


def test_sweep_cosine_mermin_row():
    table = sweep(Family.COSINE, (2, 2))
    assert list(table.columns) == ["m", "Q_lower", "B", "V_threshold"]
    row = table.iloc[0]
    assert row["m"] == 2
    assert row["Q_lower"] == pytest.approx(4.0, abs=1e-9)
    assert row["B"] == pytest.approx(2 * np.sqrt(2), abs=1e-9)
    assert row["V_threshold"] == pytest.approx(1 / np.sqrt(2), abs=1e-9)


def test_sweep_strictly_decreasing():
    table = sweep(Family.COSINE, (2, 100))
    assert len(table) == 99
    assert np.all(np.diff(table["V_threshold"].to_numpy()) < 0)


def test_sweep_matches_threshold_visibility():
    table = sweep(Family.COSINE, (2, 12), delta=0.7)
    expected = [threshold_visibility(build_cosine_tensor(m, 0.7)) for m in range(2, 13)]
    np.testing.assert_allclose(table["V_threshold"], expected, atol=1e-12)


def test_sweep_parity_powers_of_two():
    table = sweep(Family.PARITY, (2, 20))
    assert table["m"].tolist() == [2, 4, 8, 16]
    np.testing.assert_allclose(table["Q_lower"], table["m"] ** 2)
    assert isinstance(table, pd.DataFrame)


@pytest.mark.parametrize("m_range", [(1, 3), (5, 4), (2, 10 ** 6 + 1)])
def test_sweep_invalid_range(m_range):
    with pytest.raises(exceptions.InvalidParameterError):
        sweep(Family.COSINE, m_range)


def test_sweep_custom():
    with pytest.raises(exceptions.UnsupportedFamilyError):
        sweep(Family.CUSTOM, (2, 3))
