
from enum import Enum


class BoundKind(Enum):
    """Where a biseparable bound came from.
    """
    CLOSED = "closed"
    BRUTEFORCE = "bruteforce"

