import numpy as np
import pytest
import scipy.linalg

from bellwit import (
    Family,
    Party,
    ReducedMatrix,
    biseparable_closed,
    biseparable_upper_bruteforce,
    bounds_report,
    build_cosine_tensor,
    build_parity_tensor,
    d_sums,
    evaluate_operator,
    is_modified_circulant,
    mod_circulant_spectrum,
    planar_biseparable_strategy,
    planar_vector_lower_bound,
    reduced_matrix,
    singular_upper_bound
)
from bellwit import exceptions
from bellwit.bisep import MAX_BRUTEFORCE_M, modified_circulant, negacyclic_eigenvectors, sign_vectors


def cosine_closed(m):
    return m ** 2 / (2 * np.sin(np.pi / (2 * m)))


def parity_closed(m):
    return m / np.sin(np.pi / (2 * m))


def test_reduced_matrix_mermin(mermin):
    r = reduced_matrix(mermin, Party.A, np.array([1, 1]))
    np.testing.assert_allclose(r.entries, [[1.0, -1.0], [-1.0, -1.0]], atol=1e-12)
    assert r.party is Party.A
    assert singular_upper_bound(r) == pytest.approx(2 * np.sqrt(2), abs=1e-12)


def test_reduced_matrix_contracts_the_party_axis(custom3):
    signs = np.array([1, -1, 1])
    c = custom3.coeffs
    np.testing.assert_allclose(reduced_matrix(custom3, Party.A, signs).entries, np.einsum("a,abc->bc", signs, c))
    np.testing.assert_allclose(reduced_matrix(custom3, Party.B, signs).entries, np.einsum("b,abc->ac", signs, c))
    np.testing.assert_allclose(reduced_matrix(custom3, Party.C, signs).entries, np.einsum("c,abc->ab", signs, c))


@pytest.mark.parametrize("signs", [np.array([1, 1]), np.array([1, 0, -1]), np.array([1, 2, 1])])
def test_invalid_signs(bancal, signs):
    with pytest.raises(exceptions.InvalidSignsError):
        reduced_matrix(bancal, Party.A, signs)


def test_zero_matrix_bound():
    assert singular_upper_bound(ReducedMatrix(m=3, entries=np.zeros((3, 3)))) == 0.0


@pytest.mark.parametrize("m", range(2, 9))
@pytest.mark.parametrize("party", list(Party))
def test_family_reductions_are_modified_circulant(m, party):
    signs = np.ones(m, dtype=int)
    for t in (build_cosine_tensor(m, delta=0.25), build_parity_tensor(m)):
        assert is_modified_circulant(reduced_matrix(t, party, signs)) is True


def test_not_modified_circulant(custom3):
    r = reduced_matrix(custom3, Party.A, np.ones(3, dtype=int))
    assert is_modified_circulant(r) is False
    with pytest.raises(exceptions.NotModifiedCirculantError):
        mod_circulant_spectrum(r)


def test_one_by_one_is_modified_circulant():
    assert is_modified_circulant(ReducedMatrix(m=1, entries=[[2.0]])) is True


def test_negacyclic_spectrum_random_corpus():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        m = int(rng.integers(2, 13))
        entries = modified_circulant(rng.normal(size=m))
        r = ReducedMatrix(m=m, entries=entries)
        assert is_modified_circulant(r) is True
        spectrum = mod_circulant_spectrum(r)
        reversed_columns = entries[:, ::-1]
        vectors = negacyclic_eigenvectors(m)
        residual = reversed_columns @ vectors - vectors * spectrum.eigenvalues[None, :]
        assert np.max(np.abs(residual)) < 1e-9
        np.testing.assert_allclose(
            np.sort(spectrum.moduli),
            np.sort(scipy.linalg.svdvals(entries)),
            atol=1e-9
        )


def test_spectrum_omegas_are_roots_of_minus_one():
    r = ReducedMatrix(m=5, entries=modified_circulant(np.arange(5.0)))
    np.testing.assert_allclose(mod_circulant_spectrum(r).omega ** 5, -1.0, atol=1e-12)


@pytest.mark.parametrize("m", range(2, 13))
def test_d_sums(m):
    d = d_sums(m)
    assert d.shape == (4, m)
    np.testing.assert_allclose(d[1], 0.0, atol=1e-9)
    np.testing.assert_allclose(d[2], 0.0, atol=1e-9)
    np.testing.assert_allclose(d[0, 1:m - 1], 0.0, atol=1e-9)
    np.testing.assert_allclose(d[3, 1:m - 1], 0.0, atol=1e-9)
    assert d[0, 0] == pytest.approx(m / 2, abs=1e-9)
    assert d[3, 0] == pytest.approx(m / 2, abs=1e-9)
    assert d[0, m - 1] == pytest.approx(m / 2, abs=1e-9)
    assert d[3, m - 1] == pytest.approx(-m / 2, abs=1e-9)


def test_sign_vector_order():
    np.testing.assert_array_equal(
        sign_vectors(3, 0, 4),
        [[1, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1]]
    )


def test_mermin_bounds(mermin):
    assert biseparable_closed(mermin) == pytest.approx(2 * np.sqrt(2), abs=1e-9)
    bf = biseparable_upper_bruteforce(mermin)
    assert bf.value == pytest.approx(2 * np.sqrt(2), abs=1e-9)
    assert bf.party is Party.A
    assert bf.best_signs[0] == 1


@pytest.mark.parametrize("m", range(2, 9))
def test_cosine_three_way_agreement(m):
    t = build_cosine_tensor(m)
    closed = biseparable_closed(t)
    assert closed == pytest.approx(cosine_closed(m), abs=1e-9)
    assert biseparable_upper_bruteforce(t).value == pytest.approx(closed, abs=1e-9)
    assert planar_vector_lower_bound(t) == pytest.approx(closed, abs=1e-9)


@pytest.mark.parametrize("m", [2, 4, 8])
def test_parity_three_way_agreement(m):
    t = build_parity_tensor(m)
    closed = biseparable_closed(t)
    assert closed == pytest.approx(parity_closed(m), abs=1e-9)
    assert biseparable_upper_bruteforce(t).value == pytest.approx(closed, abs=1e-9)
    assert planar_vector_lower_bound(t) == pytest.approx(closed, abs=1e-9)


@pytest.mark.parametrize("m", [3, 5, 7])
def test_odd_parity_reaches_no_signalling_limit(m):
    t = build_parity_tensor(m)
    assert biseparable_closed(t) is None
    assert biseparable_upper_bruteforce(t).value == pytest.approx(m ** 2, abs=1e-9)


def test_bruteforce_custom_no_symmetry_check(custom3, threaded_compute):
    serial = biseparable_upper_bruteforce(custom3)
    parallel = biseparable_upper_bruteforce(custom3, compute=threaded_compute, chunk_size=1)
    assert parallel.value == pytest.approx(serial.value, abs=1e-12)
    assert parallel.party is serial.party
    np.testing.assert_array_equal(parallel.best_signs, serial.best_signs)
    r = reduced_matrix(custom3, serial.party, serial.best_signs)
    assert singular_upper_bound(r) == pytest.approx(serial.value, abs=1e-12)


def test_bruteforce_budget():
    t = build_cosine_tensor(MAX_BRUTEFORCE_M + 1)
    with pytest.raises(exceptions.BudgetExceededError):
        biseparable_upper_bruteforce(t)


@pytest.mark.parametrize("m", range(2, 7))
def test_cosine_bruteforce_does_not_depend_on_delta(m):
    rng = np.random.default_rng(100 + m)
    values = [
        biseparable_upper_bruteforce(build_cosine_tensor(m, delta=delta)).value
        for delta in rng.uniform(-m, m, size=10)
    ]
    np.testing.assert_allclose(values, cosine_closed(m), atol=1e-9, rtol=0)


@pytest.mark.parametrize("party", list(Party))
def test_global_sign_flip_keeps_singular_bound(custom3, bancal, party):
    rng = np.random.default_rng(7)
    for t in [custom3, bancal, build_parity_tensor(4)]:
        for _ in range(10):
            signs = rng.choice([-1, 1], size=t.m)
            plus = singular_upper_bound(reduced_matrix(t, party, signs))
            minus = singular_upper_bound(reduced_matrix(t, party, -signs))
            assert minus == pytest.approx(plus, abs=1e-12)


def test_closed_custom(custom3):
    with pytest.raises(exceptions.UnsupportedFamilyError):
        biseparable_closed(custom3)


@pytest.mark.parametrize("m", [2, 3, 5])
def test_planar_strategy_is_realized_by_a_biseparable_state(m):
    t = build_cosine_tensor(m)
    value, angles, state = planar_biseparable_strategy(t)
    assert value == pytest.approx(planar_vector_lower_bound(t), abs=1e-12)
    assert evaluate_operator(t, angles, state) == pytest.approx(value, abs=1e-9)


def test_planar_strategy_with_signs(custom3):
    signs = np.array([1, -1, -1])
    value, angles, state = planar_biseparable_strategy(custom3, signs)
    assert value == pytest.approx(planar_vector_lower_bound(custom3, signs), abs=1e-12)
    assert evaluate_operator(custom3, angles, state) == pytest.approx(value, abs=1e-9)


def test_bounds_report_bancal(bancal):
    report = bounds_report(bancal)
    assert report.family is Family.COSINE
    assert report.Q_lower == pytest.approx(13.5, abs=1e-9)
    assert report.B == pytest.approx(9.0, abs=1e-9)
    assert report.B_bruteforce == pytest.approx(9.0, abs=1e-9)
    assert report.B_planar_lower == pytest.approx(9.0, abs=1e-9)
    assert report.V_threshold == pytest.approx(2 / 3, abs=1e-9)
    assert report.NS_limit == pytest.approx(np.abs(bancal.coeffs).sum())
    assert report.provenance["B"] == "closed form"


def test_bounds_report_parity_m4(parity4):
    report = bounds_report(parity4)
    assert report.Q_lower == 16.0
    assert report.NS_limit == pytest.approx(16.0)
    assert report.V_threshold == pytest.approx(0.65328, abs=1e-5)


def test_bounds_report_odd_parity_uses_bruteforce():
    report = bounds_report(build_parity_tensor(3))
    assert report.B_closed is None
    assert report.B == pytest.approx(9.0, abs=1e-9)
    assert report.V_threshold == pytest.approx(1.0, abs=1e-9)
    assert "brute-force" in report.provenance["B"]


def test_bounds_report_without_bruteforce():
    report = bounds_report(build_parity_tensor(3), bruteforce=False)
    assert report.B is None
    assert report.B_bruteforce is None
    assert report.best_signs is None
    assert report.V_threshold is None


def test_bounds_report_over_budget():
    report = bounds_report(build_cosine_tensor(MAX_BRUTEFORCE_M + 1))
    assert report.B_bruteforce is None
    assert report.B == pytest.approx(cosine_closed(MAX_BRUTEFORCE_M + 1))


def test_bounds_report_custom(custom3):
    report = bounds_report(custom3)
    assert report.Q_lower is None
    assert report.B == report.B_bruteforce
    assert report.V_threshold is None
