"""Construction of the cosine and parity Bell tensor families.
"""

import numpy as np
from loguru import logger

from bellwit import exceptions
from bellwit.bell_tensor import BellTensor, ZERO_TOL, cosine_coefficients, parity_coefficients
from bellwit.family import Family


DEFAULT_DELTA = -0.5


def build_cosine_tensor(m: int, delta: float = DEFAULT_DELTA) -> BellTensor:
    """Build the cosine family tensor ``M[a][b][c] = cos(pi (a + b + c - delta) / m)``.

    ``m=2, delta=0`` gives the Mermin polynomial and ``m=3, delta=-1/2`` the
    three setting Bancal et al. expression.

    Parameters
    ----------
    m : int
        Settings per party.
    delta : float, default: -0.5
        Phase offset. Every bound computed from the tensor is independent of it.

    Returns
    -------
    BellTensor
        The cosine family tensor.

    Raises
    ------
    bellwit.exceptions.InvalidParameterError
        ``m`` is less than 2 or ``delta`` is not finite.
    """
    _check_m(m)
    if not np.isfinite(delta):
        raise exceptions.InvalidParameterError(f"delta must be finite, got {delta}")

    logger.debug(f"Building cosine tensor m={m} delta={delta}")

    return BellTensor(
        m=int(m),
        family=Family.COSINE,
        delta=float(delta),
        coeffs=cosine_coefficients(m=m, delta=float(delta))
    )


def build_parity_tensor(m: int) -> BellTensor:
    """Build the extended parity game tensor.

    ``M[a][b][c]`` is 0 unless ``a + b + c`` is divisible by ``m``,
    in which case it is +1 when ``(a + b + c) / m`` is even and -1 when odd.
    Indices run over ``0..m-1``.

    Parameters
    ----------
    m : int
        Settings per party.

    Returns
    -------
    BellTensor
        The parity family tensor.

    Raises
    ------
    bellwit.exceptions.InvalidParameterError
        ``m`` is less than 2.
    """
    _check_m(m)
    logger.debug(f"Building parity tensor m={m}")

    return BellTensor(
        m=int(m),
        family=Family.PARITY,
        coeffs=parity_coefficients(m=m)
    )


def nonzero_count(t: BellTensor) -> int:
    """Number of coefficients with absolute value above ``1e-12``.
    """
    return int(np.count_nonzero(np.abs(t.coeffs) > ZERO_TOL))


def slice_structure_check(t: BellTensor) -> bool:
    """Check that every axis aligned ``m x m`` slice of a parity tensor is a signed permutation matrix.

    Parameters
    ----------
    t : BellTensor
        A parity family tensor.

    Returns
    -------
    bool
        ``True`` if every slice has exactly one ``+1`` or ``-1`` in each row and column.

    Raises
    ------
    bellwit.exceptions.UnsupportedFamilyError
        The tensor is not from the parity family.
    """
    if t.family is not Family.PARITY:
        raise exceptions.UnsupportedFamilyError(
            f"Slice structure is only defined for the parity family, not '{t.family.value}'"
        )

    nonzero = np.abs(t.coeffs) > ZERO_TOL
    if not np.all(np.abs(np.abs(t.coeffs[nonzero]) - 1.0) <= ZERO_TOL):
        return False

    for axis in range(3):
        slices = np.moveaxis(nonzero, axis, 0)
        # each slice: one nonzero per row and per column
        if (
            not np.all(slices.sum(axis=1) == 1)
            or not np.all(slices.sum(axis=2) == 1)
        ):
            return False

    return True


def is_power_of_two(m: int) -> bool:
    return m > 0 and (m & (m - 1)) == 0


def _check_m(m: int) -> None:
    if int(m) != m or m < 2:
        raise exceptions.InvalidParameterError(f"m must be an integer >= 2, got {m}")
