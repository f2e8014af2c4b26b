
from pydantic import BaseModel

from bellwit.bound_kind import BoundKind
from bellwit.verdict import Verdict


class CertificationResult(BaseModel):
    """Outcome of testing correlation data against the biseparable bound.

    ``verdict`` is ``GENUINE_TRIPARTITE_ENTANGLEMENT`` only when ``margin`` is strictly above
    the tolerance and the data does not exceed the no-signalling limit.
    """
    bell_value: float
    bisep_bound: float
    bound_kind: BoundKind
    margin: float
    verdict: Verdict
    ns_violation: bool
    ns_limit: float
    tol: float

