
from typing import Any, List, Optional
from typing_extensions import Annotated

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from bellwit.family import Family


ZERO_TOL = 1e-12


class BellTensor(BaseModel):
    """Coefficients ``M[a][b][c]`` of a three-party correlator Bell expression.

    Nesting order is ``coeffs[alpha][beta][gamma]`` with alpha the setting of party A,
    beta of party B and gamma of party C.

    Parameters
    ----------
    m : int
        Settings per party. At least 2.
    family : Family
        Coefficient family. ``COSINE`` and ``PARITY`` tensors are checked against their
        defining formulas on construction.
    delta : Optional[float]
        Phase offset of the ``COSINE`` family. ``None`` for the other families.
    coeffs : np.ndarray
        Real ``(m, m, m)`` array.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    m: Annotated[int, Field(ge=2)]
    family: Family
    delta: Optional[float] = None
    coeffs: np.ndarray


    @field_validator("coeffs", mode="before")
    @classmethod
    def coeffs_as_array(cls, v: Any) -> np.ndarray:
        try:
            return np.asarray(v, dtype=float)
        except (TypeError, ValueError) as error:
            raise ValueError(f"coeffs must be a nested list of real numbers: {error}")


    @field_serializer("coeffs")
    def coeffs_serialize(self, coeffs: np.ndarray) -> List[List[List[float]]]:
        return coeffs.tolist()


    @model_validator(mode="after")
    def check_invariants(self) -> "BellTensor":
        m = self.m
        if self.coeffs.shape != (m, m, m):
            raise ValueError(f"coeffs must have shape ({m}, {m}, {m}), got {self.coeffs.shape}")

        if not np.all(np.isfinite(self.coeffs)):
            raise ValueError("coeffs must be finite")

        if self.family is Family.COSINE:
            if self.delta is None:
                raise ValueError("the cosine family requires delta")

            expected = cosine_coefficients(m=m, delta=self.delta)
            if np.max(np.abs(self.coeffs - expected)) > ZERO_TOL:
                raise ValueError("cosine coefficients do not match cos(pi (a + b + c - delta) / m)")

        elif self.family is Family.PARITY:
            if self.delta is not None:
                raise ValueError("the parity family takes no delta")

            if np.max(np.abs(self.coeffs - parity_coefficients(m=m))) > ZERO_TOL:
                raise ValueError("parity coefficients do not match the extended parity game")

        return self


def index_sums(m: int) -> np.ndarray:
    """``s[a, b, c] = a + b + c`` for indices in ``0..m-1``.
    """
    i = np.arange(m)

    return i[:, None, None] + i[None, :, None] + i[None, None, :]


def cosine_coefficients(m: int, delta: float) -> np.ndarray:
    return np.cos(np.pi * (index_sums(m) - delta) / m)


def parity_coefficients(m: int) -> np.ndarray:
    s = index_sums(m)
    # s // m is 0, 1 or 2 on the nonzero entries
    sign = np.where((s // m) % 2 == 0, 1.0, -1.0)

    return np.where(s % m == 0, sign, 0.0)
