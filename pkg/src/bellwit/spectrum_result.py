
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator


class SpectrumResult(BaseModel):
    """Eigenvalues of a modified circulant matrix with its columns reversed.

    ``eigenvalues[j]`` belongs to the eigenvector ``(1, w_j, w_j**2, ...)`` with
    ``omega[j] = w_j = exp(2 pi i (j + 1/2) / m)``.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    eigenvalues: np.ndarray
    omega: np.ndarray


    @field_validator("eigenvalues", "omega", mode="before")
    @classmethod
    def as_complex(cls, v: Any) -> np.ndarray:
        return np.asarray(v, dtype=complex)


    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.eigenvalues)

