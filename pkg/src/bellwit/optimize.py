"""See-saw search for the quantum maximum over pure 3-qubit states and ±1 qubit observables.

The search alternates two exact steps. With the observables fixed, the best state is the top
eigenvector of the 8x8 Bell operator. With the state fixed, the objective is linear in each
observable's Bloch vector, so the best observable is the unit vector along its gradient.
Neither step can lower the objective.

Randomness comes from ``numpy.random.PCG64``. Restart ``k`` is seeded with child ``k`` of
``numpy.random.SeedSequence(seed)``, so results depend only on ``seed`` and not on how the
restarts are scheduled.
"""

from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg
from loguru import logger

from bellwit import exceptions
from bellwit.bell_tensor import BellTensor
from bellwit.compute import ComputeBackend, MainProcessCompute
from bellwit.correlation_tensor import CorrelationTensor
from bellwit.family import Family
from bellwit.measurement_angles import MeasurementAngles
from bellwit.opt_result import OptResult
from bellwit.quantum import PAULIS, no_signalling_limit, pauli_observables, quantum_lower_bound


DEFAULT_RESTARTS = 20
DEFAULT_TOL = 1e-9
MAX_ITERATIONS = 10_000
STATE_NORM_TOL = 1e-9
DEGENERACY_TOL = 1e-10
MONOTONE_TOL = 1e-9
TIE_TOL = 1e-12
CONJECTURE_TOL = 1e-6

_GRADIENTS = (
    "abc,by,cz,xyz->ax",
    "abc,ax,cz,xyz->by",
    "abc,ax,by,xyz->cz"
)


def bell_operator(t: BellTensor, angles: MeasurementAngles) -> np.ndarray:
    """The 8x8 Bell operator ``sum M[a][b][c] A_a (x) B_b (x) C_c``.
    """
    _check_m(t, angles)

    return _operator(t.coeffs, pauli_observables(angles))


def evaluate_operator(t: BellTensor, angles: MeasurementAngles, state: np.ndarray) -> float:
    """Expectation of the Bell operator in a pure 3-qubit state.

    Parameters
    ----------
    t : BellTensor
        The Bell tensor.
    angles : MeasurementAngles
        Observables of the three parties.
    state : np.ndarray
        Unit 8 dimensional state vector, qubit A most significant.

    Returns
    -------
    float
        ``<psi| W |psi>``.

    Raises
    ------
    bellwit.exceptions.InvalidStateError
        The state does not have 8 amplitudes or is not normalized.
    bellwit.exceptions.DimensionMismatchError
        The tensor and the angles have different ``m``.
    """
    psi = _check_state(state)
    w = bell_operator(t, angles)

    return float(np.real(np.vdot(psi, w @ psi)))


def state_correlators(angles: MeasurementAngles, state: np.ndarray) -> CorrelationTensor:
    """Three-party correlators of the observables in a pure 3-qubit state.

    Raises
    ------
    bellwit.exceptions.InvalidStateError
        The state does not have 8 amplitudes or is not normalized.
    """
    psi = _check_state(state).reshape(2, 2, 2)
    obs = pauli_observables(angles)
    values = np.einsum(
        "ikm,aij,bkl,cmn,jln->abc",
        psi.conj(), obs[0], obs[1], obs[2], psi,
        optimize=True
    )

    return CorrelationTensor(m=angles.m, values=np.real(values))


def seesaw_quantum_max(
    t: BellTensor,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    compute: Optional[ComputeBackend] = None,
    max_iterations: int = MAX_ITERATIONS
) -> OptResult:
    """Search the quantum maximum of the Bell expression by see-saw iteration.

    Each restart draws angles uniformly on the sphere, starts from the top eigenvector of
    the resulting Bell operator and alternates observable and state updates until the
    relative improvement of one iteration drops below ``tol``, or ``max_iterations`` is hit.
    The best restart wins; ties go to the lowest restart index.

    A value above the conjectured maximum ``m**3 / 2`` of the cosine family is logged as a
    warning and reported through ``OptResult.exceeds_lower_bound``, never clamped.

    Parameters
    ----------
    t : BellTensor
        The Bell tensor.
    restarts : int, default: 20
        Number of random restarts.
    seed : int, default: 0
        Seed of the ``SeedSequence`` the restarts are spawned from.
    tol : float, default: 1e-9
        Relative improvement under which a restart counts as converged.
    compute : Optional[ComputeBackend], optional
        Backend the restarts run on. By default ``MainProcessCompute``.
    max_iterations : int, default: 10000
        Iteration cap per restart.

    Returns
    -------
    OptResult
        The best strategy found.

    Raises
    ------
    bellwit.exceptions.InvalidParameterError
        ``restarts`` is less than 1 or ``tol`` is not positive.
    """
    if restarts < 1:
        raise exceptions.InvalidParameterError(f"restarts must be at least 1, got {restarts}")

    if not tol > 0:
        raise exceptions.InvalidParameterError(f"tol must be positive, got {tol}")

    if compute is None:
        compute = MainProcessCompute()

    children = np.random.SeedSequence(seed).spawn(restarts)
    logger.debug(f"See-saw m={t.m}: {restarts} restarts from seed {seed}")
    results = compute.map(
        _seesaw_restart,
        [(t.coeffs, child, tol, max_iterations) for child in children]
    )
    values = np.array([result[0] for result in results])
    best_value = float(np.max(values))
    best = int(np.argmax(values >= best_value - TIE_TOL * max(1.0, abs(best_value))))
    _, bloch, psi, iterations, converged, trace = results[best]
    if converged is False:
        logger.warning(f"See-saw restart {best} hit the iteration cap without converging")

    angles = MeasurementAngles.from_bloch(bloch)
    value = evaluate_operator(t, angles, psi)

    exceeds = False
    if t.family is not Family.CUSTOM:
        lower = quantum_lower_bound(t)
        exceeds = value > lower + CONJECTURE_TOL
        if exceeds is True:
            logger.warning(
                f"See-saw value {value!r} exceeds the closed form quantum value {lower!r} for "
                f"{t.family.value} m={t.m}: the conjectured maximum is beaten"
            )

    ns_limit = no_signalling_limit(t)
    if value > ns_limit + 1e-9:
        logger.warning(f"See-saw value {value!r} is above the no-signalling limit {ns_limit!r}")

    logger.debug(f"See-saw m={t.m}: best {value!r} from restart {best} after {iterations} iterations")

    return OptResult(
        value=value,
        angles=angles,
        state=psi,
        iterations=iterations,
        converged=converged,
        restarts_used=restarts,
        restart_index=best,
        exceeds_lower_bound=exceeds,
        trace=trace
    )


def _seesaw_restart(
    task: Tuple[np.ndarray, np.random.SeedSequence, float, int]
) -> Tuple[float, np.ndarray, np.ndarray, int, bool, List[float]]:
    coeffs, seed_seq, tol, max_iterations = task
    m = coeffs.shape[0]
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    cos_theta = rng.uniform(-1.0, 1.0, size=(3, m))
    phi = rng.uniform(0.0, 2.0 * np.pi, size=(3, m))
    sin_theta = np.sqrt(1.0 - cos_theta ** 2)
    bloch = np.stack([sin_theta * np.cos(phi), sin_theta * np.sin(phi), cos_theta], axis=-1)

    value, psi = _top_eigenvector(_operator(coeffs, _observables(bloch)))
    trace = [value]
    converged = False
    iterations = 0
    while iterations < max_iterations:
        iterations += 1
        correlations = _pauli_correlations(psi)
        for party in range(3):
            bloch[party] = _aligned(coeffs, bloch, correlations, party)

        new_value, psi = _top_eigenvector(_operator(coeffs, _observables(bloch)))
        if new_value < value - MONOTONE_TOL * max(1.0, abs(value)):
            logger.warning(f"See-saw objective decreased from {value!r} to {new_value!r}")

        improvement = new_value - value
        value = new_value
        trace.append(value)
        if improvement < tol * max(1.0, abs(value)):
            converged = True
            break

    return value, bloch, psi, iterations, converged, trace


def _aligned(coeffs: np.ndarray, bloch: np.ndarray, correlations: np.ndarray, party: int) -> np.ndarray:
    others = [bloch[p] for p in range(3) if p != party]
    gradient = np.einsum(_GRADIENTS[party], coeffs, *others, correlations, optimize=True)
    norms = np.linalg.norm(gradient, axis=1)
    updated = bloch[party].copy()
    # a zero gradient leaves the setting free; keep it
    moving = norms > 1e-14
    updated[moving] = gradient[moving] / norms[moving][:, None]

    return updated


def _pauli_correlations(psi: np.ndarray) -> np.ndarray:
    """``T[x][y][z] = <psi| s_x (x) s_y (x) s_z |psi>`` for the three Pauli matrices.
    """
    p = psi.reshape(2, 2, 2)

    return np.real(np.einsum(
        "ikm,xij,ykl,zmn,jln->xyz",
        p.conj(), PAULIS, PAULIS, PAULIS, p,
        optimize=True
    ))


def _observables(bloch: np.ndarray) -> np.ndarray:
    return np.einsum("psk,kij->psij", bloch, PAULIS)


def _operator(coeffs: np.ndarray, obs: np.ndarray) -> np.ndarray:
    w = np.einsum("abc,aij,bkl,cmn->ikmjln", coeffs, obs[0], obs[1], obs[2], optimize=True)

    return w.reshape(8, 8)


def _top_eigenvector(w: np.ndarray) -> Tuple[float, np.ndarray]:
    """Largest eigenvalue and a deterministic unit eigenvector.

    In a degenerate top eigenspace the projection of the first computational basis state
    with a nonzero projection is taken. The global phase makes the largest amplitude real
    and positive.
    """
    values, vectors = scipy.linalg.eigh(w)
    top = float(values[-1])
    space = vectors[:, values >= top - DEGENERACY_TOL * max(1.0, abs(top))]
    if space.shape[1] == 1:
        psi = space[:, 0]
    else:
        projector = space @ space.conj().T
        k = int(np.argmax(np.linalg.norm(projector, axis=0) > 1e-6))
        psi = projector[:, k]

    psi = psi / np.linalg.norm(psi)
    k = int(np.argmax(np.abs(psi)))
    psi = psi * (np.abs(psi[k]) / psi[k])

    return top, psi


def _check_state(state: np.ndarray) -> np.ndarray:
    psi = np.asarray(state, dtype=complex)
    if psi.shape != (8,):
        raise exceptions.InvalidStateError(f"State must have 8 amplitudes, got shape {psi.shape}")

    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > STATE_NORM_TOL:
        raise exceptions.InvalidStateError(f"State must have unit norm, got {norm!r}")

    return psi


def _check_m(t: BellTensor, angles: MeasurementAngles) -> None:
    if t.m != angles.m:
        raise exceptions.DimensionMismatchError(
            f"Bell tensor has m={t.m} but angles have m={angles.m}"
        )
