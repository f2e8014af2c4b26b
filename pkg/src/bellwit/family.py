
from enum import Enum


class Family(Enum):
    """Bell coefficient families.

    - ``COSINE`` - ``cos(pi (a + b + c - delta) / m)`` coefficients.
    - ``PARITY`` - Extended parity game coefficients in ``{-1, 0, +1}``.
    - ``CUSTOM`` - User supplied coefficients. Family specific closed forms do not apply.
    """
    COSINE = "cosine"
    PARITY = "parity"
    CUSTOM = "custom"

