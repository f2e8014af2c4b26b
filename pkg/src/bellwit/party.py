
from enum import Enum


class Party(Enum):
    """The three parties. The value is the axis of the party's index in a Bell tensor.
    """
    A = "A"
    B = "B"
    C = "C"


    @property
    def axis(self) -> int:
        return "ABC".index(self.value)

