__all__ = [
    "ComputeBackend",
    "MainProcessCompute",
    "MultiprocessCompute",
    "ThreadedCompute"
]

from bellwit.compute.compute_backend import ComputeBackend

from bellwit.compute.main_process_compute import MainProcessCompute
from bellwit.compute.multiprocess_compute import MultiprocessCompute
from bellwit.compute.threaded_compute import ThreadedCompute
