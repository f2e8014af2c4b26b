"""Bell values of qubit strategies on noisy GHZ states, and quantum lower bounds.
"""

from typing import Optional

import numpy as np
from loguru import logger

from bellwit import exceptions
from bellwit.bell_tensor import BellTensor
from bellwit.correlation_tensor import CorrelationTensor
from bellwit.family import Family
from bellwit.measurement_angles import MeasurementAngles
from bellwit.state_spec import StateSpec


PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = np.stack([PAULI_X, PAULI_Y, PAULI_Z])


def ghz_correlators(
    angles: MeasurementAngles,
    state: Optional[StateSpec] = None
) -> CorrelationTensor:
    """Three-party correlators of equatorial-type qubit measurements on a noisy GHZ state.

    ``values[a][b][c] = V sin(tA_a) sin(tB_b) sin(tC_c) cos(pA_a + pB_b + pC_c)``.
    The maximally mixed part of the state gives zero for every three-party correlator
    of traceless observables, so noise enters only as the factor ``V``.

    Parameters
    ----------
    angles : MeasurementAngles
        Measurement angles of the three parties.
    state : Optional[StateSpec], optional
        The noisy GHZ state. By default the pure GHZ state (``V=1``).

    Returns
    -------
    CorrelationTensor
        The ``m x m x m`` correlators.
    """
    if state is None:
        state = StateSpec()

    sin_theta = np.sin(angles.theta)
    amplitude = np.einsum("a,b,c->abc", sin_theta[0], sin_theta[1], sin_theta[2])
    phase = (
        angles.phi[0][:, None, None]
        + angles.phi[1][None, :, None]
        + angles.phi[2][None, None, :]
    )

    return CorrelationTensor(
        m=angles.m,
        values=state.visibility * amplitude * np.cos(phase)
    )


def canonical_angles(t: BellTensor) -> MeasurementAngles:
    """Equatorial angles that make every GHZ correlator equal its Bell coefficient.

    All ``theta = pi / 2``. Cosine family: ``phi_k = pi (k - delta / 3) / m`` for every party.
    Parity family: ``phi_k = pi k / m``.

    Raises
    ------
    bellwit.exceptions.UnsupportedFamilyError
        The tensor is a custom tensor.
    """
    k = np.arange(t.m)
    if t.family is Family.COSINE:
        phi = np.pi * (k - t.delta / 3.0) / t.m
    elif t.family is Family.PARITY:
        phi = np.pi * k / t.m
    else:
        raise exceptions.UnsupportedFamilyError("Canonical angles are not defined for custom tensors")

    return MeasurementAngles(
        m=t.m,
        theta=np.full((3, t.m), np.pi / 2.0),
        phi=np.tile(phi, (3, 1))
    )


def bell_value(t: BellTensor, c: CorrelationTensor) -> float:
    """Contract the Bell coefficients with the correlators.

    Raises
    ------
    bellwit.exceptions.DimensionMismatchError
        The tensor and the correlators have different ``m``.
    """
    if t.m != c.m:
        raise exceptions.DimensionMismatchError(
            f"Bell tensor has m={t.m} but correlators have m={c.m}"
        )

    return float(np.sum(t.coeffs * c.values))


def quantum_lower_bound(t: BellTensor) -> float:
    """Quantum value reached by the canonical GHZ strategy.

    ``m**3 / 2`` for the cosine family and ``m**2`` for the parity family.

    Raises
    ------
    bellwit.exceptions.UnsupportedFamilyError
        The tensor is a custom tensor.
    """
    if t.family is Family.COSINE:
        return t.m ** 3 / 2.0
    elif t.family is Family.PARITY:
        return float(t.m ** 2)

    raise exceptions.UnsupportedFamilyError("No closed form quantum lower bound for custom tensors")


def no_signalling_limit(t: BellTensor) -> float:
    """Algebraic maximum: the sum of the absolute values of the coefficients.
    """
    return float(np.sum(np.abs(t.coeffs)))


def pauli_observables(angles: MeasurementAngles) -> np.ndarray:
    """2x2 observables of every party and setting, shaped ``(3, m, 2, 2)``.
    """
    logger.debug(f"Building Pauli observables for m={angles.m}")

    return np.einsum("psk,kij->psij", angles.bloch(), PAULIS)
