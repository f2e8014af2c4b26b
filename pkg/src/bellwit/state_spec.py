
from typing_extensions import Annotated

from pydantic import BaseModel, Field


class StateSpec(BaseModel):
    """Noisy GHZ state ``V |GHZ><GHZ| + (1 - V) I / 8``.
    """
    visibility: Annotated[float, Field(ge=0.0, le=1.0)] = 1.0

