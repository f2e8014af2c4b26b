
from enum import Enum


class Verdict(Enum):
    GENUINE_TRIPARTITE_ENTANGLEMENT = "GenuineTripartiteEntanglement"
    INCONCLUSIVE = "Inconclusive"

