from concurrent.futures import ProcessPoolExecutor
import multiprocessing as mp
import os
from typing import Any, Callable, Iterable, List, Optional

from loguru import logger

from bellwit import exceptions
from bellwit.compute.compute_backend import ComputeBackend


class MultiprocessCompute(ComputeBackend):
    """Local multiprocessing compute backend.

    Uses a pool of processes for compute.
    Made with the "spawn" context.

    Functions handed to ``map`` must be importable module level functions,
    and their arguments picklable.

    Parameters
    ----------
    max_workers : Optional[int], optional
        The max number of worker processes.
        By default it will be the number of processor cores available to this process.

    Examples
    --------
    .. code-block:: python

        from bellwit import MultiprocessCompute, build_cosine_tensor, seesaw_quantum_max

        with MultiprocessCompute() as compute:
            result = seesaw_quantum_max(build_cosine_tensor(4), compute=compute)

    """


    def __init__(self, max_workers: Optional[int] = None):
        if max_workers is None:
            max_workers = _available_cores()

        if max_workers < 1:
            raise exceptions.InvalidParameterError(f"max_workers must be at least 1, got {max_workers}")

        super().__init__(max_workers=max_workers)
        self._process_pool: Optional[ProcessPoolExecutor] = None


    def initialize(self) -> None:
        """Start the process pool.
        """
        if self._process_pool is None:
            logger.debug(f"Starting process pool with {self.max_workers} workers")
            self._process_pool = ProcessPoolExecutor(
                max_workers=self.max_workers,
                mp_context=mp.get_context("spawn") # must use spawn, it's also the most compatible
            )

        super().initialize()


    def shutdown(self) -> None:
        """Early clean up of compute backend resources.

        Waits for running tasks to finish.
        """
        if self._process_pool is not None:
            self._process_pool.shutdown(wait=True)
            self._process_pool = None

        super().shutdown()


    def map(self, fn: Callable[..., Any], items: Iterable[Any]) -> List[Any]:
        if self._initialized is False:
            self.initialize()

        return list(self._process_pool.map(fn, items))


def _available_cores() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError: # pragma: no cover
        return os.cpu_count() or 1
