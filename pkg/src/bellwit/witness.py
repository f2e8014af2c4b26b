"""Device independent certification of genuine tripartite entanglement.
"""

from typing import Optional, Tuple, Union

import numpy as np
import pandas as pd
from loguru import logger

from bellwit import exceptions
from bellwit.bell_tensor import BellTensor
from bellwit.bisep import biseparable_closed, biseparable_upper_bruteforce
from bellwit.bound_kind import BoundKind
from bellwit.certification_result import CertificationResult
from bellwit.compute import ComputeBackend
from bellwit.correlation_tensor import CorrelationTensor, in_correlator_range
from bellwit.family import Family
from bellwit.quantum import bell_value, canonical_angles, ghz_correlators, no_signalling_limit
from bellwit.state_spec import StateSpec
from bellwit.tensor import DEFAULT_DELTA, is_power_of_two
from bellwit.verdict import Verdict


DEFAULT_TOL = 1e-9
MAX_SWEEP_M = 10 ** 6
SWEEP_COLUMNS = ["m", "Q_lower", "B", "V_threshold"]


def certify(
    t: BellTensor,
    c: CorrelationTensor,
    tol: float = DEFAULT_TOL,
    compute: Optional[ComputeBackend] = None
) -> CertificationResult:
    """Decide whether correlation data certifies genuine tripartite entanglement.

    The Bell value of the data is compared with the biseparable bound: the closed form when
    one exists, otherwise the brute-force upper bound. Entanglement is certified only when the
    Bell value beats the bound by **more** than ``tol``. Data above the no-signalling limit is
    inconsistent and never certified.

    Parameters
    ----------
    t : BellTensor
        The Bell tensor.
    c : CorrelationTensor
        Measured or simulated correlators.
    tol : float, default: 1e-9
        Certification tolerance. Raise it to absorb the error bars of experimental data.
    compute : Optional[ComputeBackend], optional
        Backend for the brute-force bound, if one is needed.

    Returns
    -------
    CertificationResult
        The verdict and the numbers behind it.

    Raises
    ------
    bellwit.exceptions.InvalidDataError
        A correlator lies outside ``[-1, 1]``.
    bellwit.exceptions.DimensionMismatchError
        The tensor and the data have different ``m``.
    bellwit.exceptions.InvalidParameterError
        ``tol`` is negative.
    """
    if not tol >= 0:
        raise exceptions.InvalidParameterError(f"tol must be non-negative, got {tol}")

    if t.m != c.m:
        raise exceptions.DimensionMismatchError(f"Bell tensor has m={t.m} but data has m={c.m}")

    if np.shape(c.values) != (c.m, c.m, c.m) or not in_correlator_range(np.asarray(c.values)):
        raise exceptions.InvalidDataError("Correlators must lie in [-1, 1] (tolerance 1e-9)")

    value = bell_value(t, c)
    bound = None
    if t.family is not Family.CUSTOM:
        bound = biseparable_closed(t)

    if bound is not None:
        kind = BoundKind.CLOSED
    else:
        bound = biseparable_upper_bruteforce(t, compute=compute).value
        kind = BoundKind.BRUTEFORCE

    ns_limit = no_signalling_limit(t)
    ns_violation = value > ns_limit + max(tol, DEFAULT_TOL * max(1.0, ns_limit))
    margin = value - bound
    if ns_violation is True:
        logger.warning(
            f"Bell value {value!r} exceeds the no-signalling limit {ns_limit!r}: the data is corrupt"
        )
        verdict = Verdict.INCONCLUSIVE
    elif margin > tol:
        verdict = Verdict.GENUINE_TRIPARTITE_ENTANGLEMENT
    else:
        verdict = Verdict.INCONCLUSIVE

    logger.debug(f"Certify m={t.m}: value {value!r} bound {bound!r} ({kind.value}) -> {verdict.value}")

    return CertificationResult(
        bell_value=value,
        bisep_bound=bound,
        bound_kind=kind,
        margin=margin,
        verdict=verdict,
        ns_violation=ns_violation,
        ns_limit=ns_limit,
        tol=tol
    )


def threshold_visibility(t: BellTensor) -> float:
    """Lowest GHZ visibility whose canonical correlators beat the biseparable bound.

    ``1 / (m sin(pi / 2m))`` for the cosine family and for the parity family with ``m`` a power of 2.
    It decreases towards ``2 / pi`` as ``m`` grows.

    Raises
    ------
    bellwit.exceptions.ClosedFormNotAvailableError
        Parity tensor with ``m`` not a power of 2.
    bellwit.exceptions.UnsupportedFamilyError
        The tensor is a custom tensor.
    """
    if t.family is Family.CUSTOM:
        raise exceptions.UnsupportedFamilyError("No threshold visibility for custom tensors")

    if t.family is Family.PARITY and not is_power_of_two(t.m):
        raise exceptions.ClosedFormNotAvailableError(
            f"The parity biseparable bound is only known to be tight for m a power of 2, got m={t.m}"
        )

    return float(_threshold(float(t.m)))


def sweep(
    family: Family,
    m_range: Tuple[int, int],
    delta: float = DEFAULT_DELTA
) -> pd.DataFrame:
    """Closed form bounds for a range of settings.

    Parameters
    ----------
    family : Family
        ``COSINE`` or ``PARITY``. For the parity family only powers of 2 have rows.
    m_range : Tuple[int, int]
        Inclusive range of ``m``, within ``2..10**6``.
    delta : float, default: -0.5
        Cosine phase offset. None of the closed forms depend on it.

    Returns
    -------
    pd.DataFrame
        Columns ``m, Q_lower, B, V_threshold``, one row per ``m`` in increasing order.

    Raises
    ------
    bellwit.exceptions.InvalidParameterError
        The range is empty or outside ``2..10**6``.
    bellwit.exceptions.UnsupportedFamilyError
        ``family`` is ``CUSTOM``.
    """
    if family is Family.CUSTOM:
        raise exceptions.UnsupportedFamilyError("Sweeps need a closed form family")

    low, high = m_range
    if not 2 <= low <= high <= MAX_SWEEP_M:
        raise exceptions.InvalidParameterError(
            f"m range must satisfy 2 <= low <= high <= {MAX_SWEEP_M}, got {low}..{high}"
        )

    m = np.arange(low, high + 1, dtype=np.int64)
    if family is Family.PARITY:
        m = m[(m & (m - 1)) == 0]

    logger.debug(f"Sweep {family.value} delta={delta} over {m.shape[0]} values of m")
    mf = m.astype(float)
    sin_half = np.sin(np.pi / (2.0 * mf))
    if family is Family.COSINE:
        q_lower = mf ** 3 / 2.0
        bisep = mf ** 2 / (2.0 * sin_half)
    else:
        q_lower = mf ** 2
        bisep = mf / sin_half

    return pd.DataFrame(
        {
            "m": m,
            "Q_lower": q_lower,
            "B": bisep,
            "V_threshold": _threshold(mf)
        },
        columns=SWEEP_COLUMNS
    )


def simulate_noisy_ghz(t: BellTensor, V: float) -> CorrelationTensor:
    """Correlators of the canonical strategy on the noisy GHZ state of visibility ``V``.

    Raises
    ------
    bellwit.exceptions.InvalidParameterError
        ``V`` is outside ``[0, 1]``.
    bellwit.exceptions.UnsupportedFamilyError
        The tensor is a custom tensor.
    """
    if not 0.0 <= V <= 1.0:
        raise exceptions.InvalidParameterError(f"Visibility must lie in [0, 1], got {V}")

    return ghz_correlators(canonical_angles(t), StateSpec(visibility=V))


def flip_visibility(
    t: BellTensor,
    tol: float = DEFAULT_TOL,
    precision: float = 1e-10,
    compute: Optional[ComputeBackend] = None
) -> Optional[float]:
    """Locate by bisection the visibility at which simulated data starts to certify.

    Returns ``None`` when even ``V=1`` does not certify.
    """
    def certifies(v: float) -> bool:
        result = certify(t, simulate_noisy_ghz(t, v), tol=tol, compute=compute)

        return result.verdict is Verdict.GENUINE_TRIPARTITE_ENTANGLEMENT

    if certifies(1.0) is False:
        return None

    low, high = 0.0, 1.0
    while high - low > precision:
        mid = 0.5 * (low + high)
        if certifies(mid) is True:
            high = mid
        else:
            low = mid

    return high


def _threshold(m: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    return 1.0 / (m * np.sin(np.pi / (2.0 * m)))
