
from typing import Any, Dict, List
from typing_extensions import Annotated

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator


PARTIES = ("A", "B", "C")


class MeasurementAngles(BaseModel):
    """Bloch sphere angles of every party's ±1 qubit observables.

    ``theta[p][k]`` and ``phi[p][k]`` are the polar and azimuthal angle, in radians, of
    setting ``k`` of party ``p`` (row 0 is A, 1 is B, 2 is C). The observable is
    ``sin(theta) cos(phi) X + sin(theta) sin(phi) Y + cos(theta) Z``.

    Angles are normalized on construction to ``theta`` in ``[0, pi]`` and ``phi`` in ``[0, 2 pi)``
    without changing the observable. Both fields also accept the file form
    ``{"A": [...], "B": [...], "C": [...]}``.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    m: Annotated[int, Field(ge=1)]
    theta: np.ndarray
    phi: np.ndarray


    @field_validator("theta", "phi", mode="before")
    @classmethod
    def party_rows(cls, v: Any) -> np.ndarray:
        if isinstance(v, dict):
            missing = [p for p in PARTIES if p not in v]
            if len(missing) > 0:
                raise ValueError(f"missing parties {missing}")

            v = [v[p] for p in PARTIES]

        try:
            return np.asarray(v, dtype=float)
        except (TypeError, ValueError) as error:
            raise ValueError(f"angles must be real numbers: {error}")


    @field_serializer("theta", "phi")
    def party_rows_serialize(self, v: np.ndarray) -> Dict[str, List[float]]:
        return {p: v[i].tolist() for i, p in enumerate(PARTIES)}


    @model_validator(mode="after")
    def normalize(self) -> "MeasurementAngles":
        shape = (3, self.m)
        if self.theta.shape != shape or self.phi.shape != shape:
            raise ValueError(
                f"theta and phi must have shape {shape}, got {self.theta.shape} and {self.phi.shape}"
            )

        if not (np.all(np.isfinite(self.theta)) and np.all(np.isfinite(self.phi))):
            raise ValueError("angles must be finite")

        two_pi = 2.0 * np.pi
        theta = np.mod(self.theta, two_pi)
        phi = self.phi.copy()
        flip = theta > np.pi
        # (theta, phi) and (2 pi - theta, phi + pi) are the same direction
        theta[flip] = two_pi - theta[flip]
        phi[flip] = phi[flip] + np.pi
        phi = np.mod(phi, two_pi)
        phi[phi >= two_pi] = 0.0
        self.theta = theta
        self.phi = phi

        return self


    @classmethod
    def from_bloch(cls, bloch: np.ndarray) -> "MeasurementAngles":
        """Angles of unit Bloch vectors shaped ``(3, m, 3)`` (party, setting, xyz).
        """
        theta = np.arccos(np.clip(bloch[..., 2], -1.0, 1.0))
        phi = np.arctan2(bloch[..., 1], bloch[..., 0])

        return cls(m=bloch.shape[1], theta=theta, phi=phi)


    def bloch(self) -> np.ndarray:
        """Unit Bloch vectors shaped ``(3, m, 3)``.
        """
        sin_theta = np.sin(self.theta)

        return np.stack(
            [
                sin_theta * np.cos(self.phi),
                sin_theta * np.sin(self.phi),
                np.cos(self.theta)
            ],
            axis=-1
        )

