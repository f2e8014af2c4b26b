"""Biseparable bounds of three-party correlator Bell expressions.

Fixing the ±1 outcomes of one party turns the tensor into a bipartite correlation matrix.
For the cosine and parity families that matrix is modified circulant (negacyclic up to a
column reversal), so its singular values come from a fixed set of eigenvectors, and the
largest one times ``m`` bounds what a biseparable state can reach.
"""

from typing import NamedTuple, Optional, Tuple

import numpy as np
import scipy.linalg
from loguru import logger

from bellwit import exceptions
from bellwit.bell_tensor import BellTensor
from bellwit.bounds_report import BoundsReport
from bellwit.compute import ComputeBackend, MainProcessCompute
from bellwit.family import Family
from bellwit.measurement_angles import MeasurementAngles
from bellwit.party import Party
from bellwit.quantum import no_signalling_limit, quantum_lower_bound
from bellwit.reduced_matrix import ReducedMatrix
from bellwit.spectrum_result import SpectrumResult
from bellwit.tensor import is_power_of_two


STRUCTURE_TOL = 1e-12
TIE_TOL = 1e-12
SYMMETRY_TOL = 1e-9
MAX_BRUTEFORCE_M = 20
CHUNK_SIZE = 4096


class BruteforceBound(NamedTuple):
    value: float
    best_signs: np.ndarray
    party: Party


def reduced_matrix(t: BellTensor, party: Party, signs: np.ndarray) -> ReducedMatrix:
    """Contract the tensor with one party's deterministic outcomes.

    Parameters
    ----------
    t : BellTensor
        The Bell tensor.
    party : Party
        The party that is split off.
    signs : np.ndarray
        That party's outcome ``+1`` or ``-1`` for every setting.

    Returns
    -------
    ReducedMatrix
        ``entries = sum_k signs[k] * (slice k of the tensor along the party's axis)``.

    Raises
    ------
    bellwit.exceptions.InvalidSignsError
        ``signs`` has the wrong length or entries other than ±1.
    """
    signs = _check_signs(signs=signs, m=t.m)
    entries = np.tensordot(signs.astype(float), t.coeffs, axes=([0], [party.axis]))

    return ReducedMatrix(m=t.m, entries=entries, signs=signs, party=party)


def modified_circulant(first_row: np.ndarray) -> np.ndarray:
    """Build the modified circulant matrix with the given first row.

    Each row is the previous one shifted one place to the left, and the entry that wraps
    around to the last column changes sign: ``R[b][c] = f(b + c)`` with ``f(s) = row[s]``
    for ``s < m`` and ``f(s) = -row[s - m]`` otherwise.
    """
    row = np.asarray(first_row)
    m = row.shape[0]
    f = np.concatenate([row, -row])
    i = np.arange(m)

    return f[i[:, None] + i[None, :]]


def is_modified_circulant(r: ReducedMatrix) -> bool:
    """Check ``R[b+1][c] == R[b][c+1]`` for ``c < m-1`` and ``R[b+1][m-1] == -R[b][0]``.
    """
    e = r.entries
    if r.m == 1:
        return True

    shifted = np.allclose(e[1:, :-1], e[:-1, 1:], rtol=0.0, atol=STRUCTURE_TOL)
    wrapped = np.allclose(e[1:, -1], -e[:-1, 0], rtol=0.0, atol=STRUCTURE_TOL)

    return bool(shifted and wrapped)


def negacyclic_omega(m: int) -> np.ndarray:
    """``w_j = exp(2 pi i (j + 1/2) / m)``, the m-th roots of -1.
    """
    return np.exp(2j * np.pi * (np.arange(m) + 0.5) / m)


def negacyclic_eigenvectors(m: int) -> np.ndarray:
    """Matrix whose column ``j`` is ``(1, w_j, ..., w_j**(m-1))``.

    These are eigenvectors of every modified circulant matrix once its columns are reversed.
    """
    omega = negacyclic_omega(m)

    return omega[None, :] ** np.arange(m)[:, None]


def mod_circulant_spectrum(r: ReducedMatrix) -> SpectrumResult:
    """Eigenvalues of a modified circulant matrix after reversing its column order.

    The caller passes the matrix as it comes out of ``reduced_matrix``; the reversal is done here.
    ``lambda_j = sum_c row0[c] w_j**c`` where ``row0`` is the first row of the reversed matrix.

    Raises
    ------
    bellwit.exceptions.NotModifiedCirculantError
        The matrix does not have the modified circulant structure.
    """
    if not is_modified_circulant(r):
        raise exceptions.NotModifiedCirculantError("Matrix is not modified circulant")

    row0 = r.entries[0, ::-1]
    vectors = negacyclic_eigenvectors(r.m)

    return SpectrumResult(
        eigenvalues=row0 @ vectors,
        omega=negacyclic_omega(r.m)
    )


def singular_upper_bound(r: ReducedMatrix) -> float:
    """``m`` times the largest singular value of the reduced matrix.

    Upper bounds the quantum value of the bipartite correlation expression for any state.
    """
    if not np.any(r.entries):
        return 0.0

    return float(r.m * scipy.linalg.svdvals(r.entries)[0])


def sign_vectors(m: int, start: int, stop: int) -> np.ndarray:
    """Sign vectors number ``start`` to ``stop - 1`` in enumeration order.

    ``signs[0]`` is always +1. Vector ``i`` has ``signs[k] = -1`` when bit ``m-1-k`` of ``i``
    is set, so vector 0 is all +1 and vector 1 flips only the last entry.
    """
    index = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(m - 2, -1, -1, dtype=np.int64)
    bits = (index[:, None] >> shifts[None, :]) & 1
    signs = np.ones((index.shape[0], m), dtype=int)
    signs[:, 1:] = 1 - 2 * bits

    return signs


def biseparable_upper_bruteforce(
    t: BellTensor,
    compute: Optional[ComputeBackend] = None,
    chunk_size: int = CHUNK_SIZE
) -> BruteforceBound:
    """Maximize the singular value bound over every party and every sign vector.

    Sign vectors run with ``signs[0] = +1`` (a global sign flip leaves singular values alone),
    in the order of ``sign_vectors``, parties in the order A, B, C. The witness reported is the
    first one whose value is within ``1e-12`` of the maximum.

    For cosine and parity tensors, which are symmetric under party exchange, the three
    per-party maxima are checked to agree.

    Parameters
    ----------
    t : BellTensor
        The Bell tensor. ``m`` at most 20.
    compute : Optional[ComputeBackend], optional
        Backend the chunks are mapped on. By default ``MainProcessCompute``.
    chunk_size : int, default: 4096
        Sign vectors per task.

    Returns
    -------
    BruteforceBound
        The bound, the maximizing sign vector and the party it belongs to.

    Raises
    ------
    bellwit.exceptions.BudgetExceededError
        ``m`` is larger than 20.
    bellwit.exceptions.SymmetryViolationError
        A party symmetric tensor gave different maxima for different parties.
    """
    if t.m > MAX_BRUTEFORCE_M:
        raise exceptions.BudgetExceededError(
            f"Brute force over 2^{t.m - 1} sign vectors is over budget (m <= {MAX_BRUTEFORCE_M}). "
            "Use the closed form bound instead."
        )

    if compute is None:
        compute = MainProcessCompute()

    n_vectors = 2 ** (t.m - 1)
    tasks = []
    for party in Party:
        coeffs = np.ascontiguousarray(np.moveaxis(t.coeffs, party.axis, 0))
        for start in range(0, n_vectors, chunk_size):
            tasks.append((coeffs, start, min(start + chunk_size, n_vectors)))

    logger.debug(f"Brute force m={t.m}: {n_vectors} sign vectors x 3 parties in {len(tasks)} chunks")
    values = np.concatenate(compute.map(_bruteforce_chunk, tasks))
    per_party = values.reshape(3, n_vectors)
    party_max = per_party.max(axis=1)
    if (
        t.family is not Family.CUSTOM
        and np.max(party_max) - np.min(party_max) > SYMMETRY_TOL
    ):
        raise exceptions.SymmetryViolationError(
            f"Per party brute force maxima differ for a symmetric tensor: {party_max.tolist()}"
        )

    best = float(np.max(values))
    first = int(np.argmax(values >= best - TIE_TOL * max(1.0, abs(best))))
    party = list(Party)[first // n_vectors]
    best_signs = sign_vectors(t.m, first % n_vectors, first % n_vectors + 1)[0]
    logger.debug(f"Brute force m={t.m}: max {best} for party {party.value} signs {best_signs.tolist()}")

    return BruteforceBound(value=best, best_signs=best_signs, party=party)


def _bruteforce_chunk(task: Tuple[np.ndarray, int, int]) -> np.ndarray:
    coeffs, start, stop = task
    m = coeffs.shape[0]
    signs = sign_vectors(m, start, stop).astype(float)
    reduced = np.tensordot(signs, coeffs, axes=([1], [0]))

    return m * np.linalg.svd(reduced, compute_uv=False)[:, 0]


def biseparable_closed(t: BellTensor) -> Optional[float]:
    """Closed form biseparable maximum.

    Cosine family: ``m**2 / (2 sin(pi / 2m))``. Parity family with ``m`` a power of 2:
    ``m / sin(pi / 2m)``. For other parity tensors the singular value bound is not known
    to be tight and ``None`` is returned.

    Raises
    ------
    bellwit.exceptions.UnsupportedFamilyError
        The tensor is a custom tensor.
    """
    m = t.m
    if t.family is Family.COSINE:
        return float(m ** 2 / (2.0 * np.sin(np.pi / (2 * m))))
    elif t.family is Family.PARITY:
        if is_power_of_two(m):
            return float(m / np.sin(np.pi / (2 * m)))

        return None

    raise exceptions.UnsupportedFamilyError("No closed form biseparable bound for custom tensors")


def planar_vector_lower_bound(t: BellTensor, signs: Optional[np.ndarray] = None) -> float:
    """Biseparable value reached with planar unit vectors.

    With ``C_c = (cos(pi c / m), sin(pi c / m))`` and Bob's vectors chosen optimally,
    the value of the reduced matrix ``R = reduced_matrix(t, A, signs)`` is
    ``sum_b |sum_c R[b][c] C_c|``. Rows that sum to the zero vector contribute 0.

    Parameters
    ----------
    t : BellTensor
        The Bell tensor.
    signs : Optional[np.ndarray], optional
        Alice's outcomes. By default all +1.
    """
    if signs is None:
        signs = np.ones(t.m, dtype=int)

    rows = _planar_rows(t=t, signs=signs)

    return float(np.sum(np.linalg.norm(rows, axis=1)))


def planar_biseparable_strategy(
    t: BellTensor,
    signs: Optional[np.ndarray] = None
) -> Tuple[float, MeasurementAngles, np.ndarray]:
    """Explicit biseparable strategy behind ``planar_vector_lower_bound``.

    Alice holds ``|0>`` and measures ``Z`` or ``-Z`` so her outcome for setting ``a`` is
    always ``signs[a]``. Bob and Cecil share ``(|00> + |11>) / sqrt(2)`` and measure real
    observables in the x-z plane; the planar vector ``(u, v)`` becomes the observable
    ``u Z + v X``, whose correlation on that state is the dot product of the vectors.

    Returns
    -------
    Tuple[float, MeasurementAngles, np.ndarray]
        The planar value, the angles of all three parties and the 8 dimensional state.
    """
    if signs is None:
        signs = np.ones(t.m, dtype=int)

    signs = _check_signs(signs=signs, m=t.m)
    rows = _planar_rows(t=t, signs=signs)
    norms = np.linalg.norm(rows, axis=1)
    bob = np.tile([1.0, 0.0], (t.m, 1))
    nonzero = norms > 0.0
    bob[nonzero] = rows[nonzero] / norms[nonzero][:, None]
    cecil = _cecil_vectors(t.m)

    bloch = np.zeros((3, t.m, 3))
    bloch[0, :, 2] = signs
    for p, planar in ((1, bob), (2, cecil)):
        bloch[p, :, 0] = planar[:, 1]
        bloch[p, :, 2] = planar[:, 0]

    state = np.zeros(8, dtype=complex)
    state[0b000] = state[0b011] = 1.0 / np.sqrt(2.0)

    return float(np.sum(norms)), MeasurementAngles.from_bloch(bloch), state


def d_sums(m: int) -> np.ndarray:
    """The trigonometric sums ``D1..D4`` for every ``j`` in ``0..m-1``, shaped ``(4, m)``.

    ``D1 = sum_c cos(pi c / m) cos(2 pi (j + 1/2) c / m)``, ``D2`` has ``cos sin``, ``D3`` has
    ``sin cos`` and ``D4`` has ``sin sin``. Only ``j = 0`` and ``j = m - 1`` survive:
    ``D2 = D3 = 0`` for all ``j``, and ``D1 = D4 = 0`` for ``1 <= j <= m - 2``.
    """
    c = np.arange(m)
    inner = np.pi * c / m
    outer = 2 * np.pi * (np.arange(m)[:, None] + 0.5) * c[None, :] / m

    return np.stack([
        np.cos(outer) @ np.cos(inner),
        np.sin(outer) @ np.cos(inner),
        np.cos(outer) @ np.sin(inner),
        np.sin(outer) @ np.sin(inner)
    ])


def bounds_report(
    t: BellTensor,
    compute: Optional[ComputeBackend] = None,
    bruteforce: bool = True
) -> BoundsReport:
    """Collect every bound for the tensor.

    Parameters
    ----------
    t : BellTensor
        The Bell tensor.
    compute : Optional[ComputeBackend], optional
        Backend for the brute-force search. By default ``MainProcessCompute``.
    bruteforce : bool, default: True
        Run the brute-force search. It is skipped regardless when ``m`` is over budget.

    Returns
    -------
    BoundsReport
        The report.
    """
    provenance = {}
    q_lower = None
    b_closed = None
    if t.family is not Family.CUSTOM:
        q_lower = quantum_lower_bound(t)
        provenance["Q_lower"] = "closed form value of the canonical GHZ strategy"
        b_closed = biseparable_closed(t)
        if b_closed is None:
            provenance["B_closed"] = "not available: no tight closed form for this m"
        else:
            provenance["B_closed"] = "closed form, tight"
    else:
        provenance["Q_lower"] = "not available for custom tensors"
        provenance["B_closed"] = "not available for custom tensors"

    bf = None
    if bruteforce is True and t.m <= MAX_BRUTEFORCE_M:
        bf = biseparable_upper_bruteforce(t, compute=compute)
        provenance["B_bruteforce"] = "max over parties and sign vectors of m * largest singular value"
    elif bruteforce is True:
        provenance["B_bruteforce"] = f"skipped: m > {MAX_BRUTEFORCE_M} is over the brute-force budget"
    else:
        provenance["B_bruteforce"] = "skipped on request"

    b = b_closed
    if b is not None:
        provenance["B"] = "closed form"
    elif bf is not None:
        b = bf.value
        provenance["B"] = "brute-force upper bound, tightness unknown"
    else:
        provenance["B"] = "not available"

    v_threshold = None
    if b is not None and q_lower is not None:
        v_threshold = b / q_lower
        provenance["V_threshold"] = "B / Q_lower"
    else:
        provenance["V_threshold"] = "not available"

    provenance["B_planar_lower"] = "planar vector construction with all signs +1, biseparably achievable"
    provenance["NS_limit"] = "sum of absolute coefficients"

    return BoundsReport(
        m=t.m,
        family=t.family,
        delta=t.delta,
        Q_lower=q_lower,
        B=b,
        B_closed=b_closed,
        B_bruteforce=None if bf is None else bf.value,
        B_planar_lower=planar_vector_lower_bound(t),
        NS_limit=no_signalling_limit(t),
        V_threshold=v_threshold,
        best_signs=None if bf is None else bf.best_signs.tolist(),
        party=None if bf is None else bf.party,
        provenance=provenance
    )


def _planar_rows(t: BellTensor, signs: np.ndarray) -> np.ndarray:
    reduced = reduced_matrix(t=t, party=Party.A, signs=signs)

    return reduced.entries @ _cecil_vectors(t.m)


def _cecil_vectors(m: int) -> np.ndarray:
    angle = np.pi * np.arange(m) / m

    return np.stack([np.cos(angle), np.sin(angle)], axis=1)


def _check_signs(signs: np.ndarray, m: int) -> np.ndarray:
    signs = np.asarray(signs)
    if signs.shape != (m,):
        raise exceptions.InvalidSignsError(f"Expected {m} signs, got shape {signs.shape}")

    if not np.all(np.isin(signs, (-1, 1))):
        raise exceptions.InvalidSignsError(f"Signs must be +1 or -1, got {signs.tolist()}")

    return signs.astype(int)
