
from typing import Any, List
from typing_extensions import Annotated

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator


CORRELATOR_TOL = 1e-9


class CorrelationTensor(BaseModel):
    """Three-party correlators ``values[a][b][c] = <A_a (x) B_b (x) C_c>``.

    Every entry must lie in ``[-1, 1]`` up to ``1e-9``.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    m: Annotated[int, Field(ge=1)]
    values: np.ndarray


    @field_validator("values", mode="before")
    @classmethod
    def values_as_array(cls, v: Any) -> np.ndarray:
        try:
            return np.asarray(v, dtype=float)
        except (TypeError, ValueError) as error:
            raise ValueError(f"values must be a nested list of real numbers: {error}")


    @field_serializer("values")
    def values_serialize(self, values: np.ndarray) -> List[List[List[float]]]:
        return values.tolist()


    @model_validator(mode="after")
    def check_invariants(self) -> "CorrelationTensor":
        m = self.m
        if self.values.shape != (m, m, m):
            raise ValueError(f"values must have shape ({m}, {m}, {m}), got {self.values.shape}")

        if not in_correlator_range(self.values):
            raise ValueError(f"correlators must lie in [-1, 1] (tolerance {CORRELATOR_TOL})")

        return self


def in_correlator_range(values: np.ndarray) -> bool:
    return bool(
        np.all(np.isfinite(values))
        and np.all(np.abs(values) <= 1.0 + CORRELATOR_TOL)
    )

