__version__ = "0.1.0"

__all__ = [
    "BellTensor",
    "BoundKind",
    "BoundsReport",
    "CertificationResult",
    "CorrelationTensor",
    "Family",
    "MeasurementAngles",
    "OptResult",
    "Party",
    "ReducedMatrix",
    "Settings",
    "SpectrumResult",
    "StateSpec",
    "Verdict",
    "bell_operator",
    "bell_value",
    "biseparable_closed",
    "biseparable_upper_bruteforce",
    "bounds_report",
    "build_cosine_tensor",
    "build_parity_tensor",
    "canonical_angles",
    "certify",
    "d_sums",
    "evaluate_operator",
    "flip_visibility",
    "ghz_correlators",
    "is_modified_circulant",
    "mod_circulant_spectrum",
    "no_signalling_limit",
    "nonzero_count",
    "planar_biseparable_strategy",
    "planar_vector_lower_bound",
    "quantum_lower_bound",
    "reduced_matrix",
    "seesaw_quantum_max",
    "simulate_noisy_ghz",
    "singular_upper_bound",
    "slice_structure_check",
    "state_correlators",
    "sweep",
    "threshold_visibility",
]

from bellwit import logging_config
logging_config

from bellwit.bell_tensor import BellTensor
from bellwit.bound_kind import BoundKind
from bellwit.bounds_report import BoundsReport
from bellwit.certification_result import CertificationResult
from bellwit.correlation_tensor import CorrelationTensor
from bellwit.family import Family
from bellwit.measurement_angles import MeasurementAngles
from bellwit.opt_result import OptResult
from bellwit.party import Party
from bellwit.reduced_matrix import ReducedMatrix
from bellwit.settings import Settings
from bellwit.spectrum_result import SpectrumResult
from bellwit.state_spec import StateSpec
from bellwit.verdict import Verdict

from bellwit.bisep import (
    biseparable_closed,
    biseparable_upper_bruteforce,
    bounds_report,
    d_sums,
    is_modified_circulant,
    mod_circulant_spectrum,
    planar_biseparable_strategy,
    planar_vector_lower_bound,
    reduced_matrix,
    singular_upper_bound
)
from bellwit.optimize import bell_operator, evaluate_operator, seesaw_quantum_max, state_correlators
from bellwit.quantum import (
    bell_value,
    canonical_angles,
    ghz_correlators,
    no_signalling_limit,
    quantum_lower_bound
)
from bellwit.tensor import build_cosine_tensor, build_parity_tensor, nonzero_count, slice_structure_check
from bellwit.witness import certify, flip_visibility, simulate_noisy_ghz, sweep, threshold_visibility

from bellwit.compute import *

from bellwit.compute import __all__ as compute_all

__all__ += compute_all
