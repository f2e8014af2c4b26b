
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from bellwit.family import Family
from bellwit.party import Party


class BoundsReport(BaseModel):
    """Every bound known for one Bell tensor, with the provenance of each number.

    Fields are ``None`` when the number is not available (no closed form, custom family,
    brute force skipped or over budget). ``B`` is the biseparable bound a witness would use:
    the closed form when available, otherwise the brute-force upper bound.
    """
    m: int
    family: Family
    delta: Optional[float] = None
    Q_lower: Optional[float] = None
    B: Optional[float] = None
    B_closed: Optional[float] = None
    B_bruteforce: Optional[float] = None
    B_planar_lower: float
    NS_limit: float
    V_threshold: Optional[float] = None
    best_signs: Optional[List[int]] = None
    party: Optional[Party] = None
    provenance: Dict[str, str] = Field(default_factory=dict)

