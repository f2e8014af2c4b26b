
from typing import Any, List

import numpy as np
from pydantic import BaseModel, ConfigDict, field_serializer, field_validator, model_validator

from bellwit.measurement_angles import MeasurementAngles


NORM_TOL = 1e-12


class OptResult(BaseModel):
    """Best strategy found by the see-saw search.

    ``state`` is a unit 8 dimensional vector over ``|abc>`` with A the most significant qubit.
    It serializes as a list of ``[real, imag]`` pairs. ``trace`` holds the objective after every
    iteration of the winning restart.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    value: float
    angles: MeasurementAngles
    state: np.ndarray
    iterations: int
    converged: bool
    restarts_used: int
    restart_index: int
    exceeds_lower_bound: bool = False
    trace: List[float] = []


    @field_validator("state", mode="before")
    @classmethod
    def state_as_array(cls, v: Any) -> np.ndarray:
        array = np.asarray(v)
        if array.ndim == 2 and array.shape[-1] == 2 and not np.iscomplexobj(array):
            return array[:, 0] + 1j * array[:, 1]

        return array.astype(complex)


    @field_serializer("state")
    def state_serialize(self, state: np.ndarray) -> List[List[float]]:
        return [[float(z.real), float(z.imag)] for z in state]


    @model_validator(mode="after")
    def check_state(self) -> "OptResult":
        if self.state.shape != (8,):
            raise ValueError(f"state must have 8 amplitudes, got shape {self.state.shape}")

        if abs(np.linalg.norm(self.state) - 1.0) > NORM_TOL:
            raise ValueError("state must have unit norm")

        return self

