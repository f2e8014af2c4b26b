
from typing import Any, List, Optional
from typing_extensions import Annotated

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from bellwit.party import Party


class ReducedMatrix(BaseModel):
    """Bipartite coefficient matrix left after fixing one party's outcomes.

    For ``party=A``, ``entries[b][c] = sum_a signs[a] M[a][b][c]``; for ``B`` and ``C``
    the same contraction runs over their index and the remaining two indices keep their order.
    ``signs`` and ``party`` are ``None`` for matrices that were not produced from a tensor.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    m: Annotated[int, Field(ge=1)]
    entries: np.ndarray
    signs: Optional[np.ndarray] = None
    party: Optional[Party] = None


    @field_validator("entries", mode="before")
    @classmethod
    def entries_as_array(cls, v: Any) -> np.ndarray:
        return np.asarray(v, dtype=float)


    @field_validator("signs", mode="before")
    @classmethod
    def signs_as_array(cls, v: Any) -> Optional[np.ndarray]:
        if v is None:
            return None

        return np.asarray(v, dtype=int)


    @field_serializer("entries")
    def entries_serialize(self, entries: np.ndarray) -> List[List[float]]:
        return entries.tolist()


    @field_serializer("signs")
    def signs_serialize(self, signs: Optional[np.ndarray]) -> Optional[List[int]]:
        if signs is None:
            return None

        return signs.tolist()


    @model_validator(mode="after")
    def check_shape(self) -> "ReducedMatrix":
        if self.entries.shape != (self.m, self.m):
            raise ValueError(f"entries must have shape ({self.m}, {self.m}), got {self.entries.shape}")

        if self.signs is not None and self.signs.shape != (self.m,):
            raise ValueError(f"signs must have length {self.m}")

        return self

