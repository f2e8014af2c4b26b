from concurrent.futures import ThreadPoolExecutor
import os
from typing import Any, Callable, Iterable, List, Optional

from loguru import logger

from bellwit import exceptions
from bellwit.compute.compute_backend import ComputeBackend


class ThreadedCompute(ComputeBackend):
    """Multithreaded compute backend.

    Uses a pool of threads for compute.

    The heavy lifting (batched SVDs, eigen decompositions, einsum contractions) happens
    inside numpy and LAPACK which release the GIL, so threads do run in parallel here.

    Parameters
    ----------
    max_workers : Optional[int], optional
        The max number of worker threads.
        By default it will be the number of processor cores on the system.

    Examples
    --------
    .. code-block:: python

        from bellwit import ThreadedCompute, biseparable_upper_bruteforce, build_cosine_tensor

        with ThreadedCompute(max_workers=4) as compute:
            bound = biseparable_upper_bruteforce(build_cosine_tensor(8), compute=compute)

    """


    def __init__(self, max_workers: Optional[int] = None):
        if max_workers is None:
            max_workers = os.cpu_count() or 1

        if max_workers < 1:
            raise exceptions.InvalidParameterError(f"max_workers must be at least 1, got {max_workers}")

        super().__init__(max_workers=max_workers)
        self._thread_pool: Optional[ThreadPoolExecutor] = None


    def initialize(self) -> None:
        """Start the thread pool.
        """
        if self._thread_pool is None:
            logger.debug(f"Starting thread pool with {self.max_workers} workers")
            self._thread_pool = ThreadPoolExecutor(max_workers=self.max_workers)

        super().initialize()


    def shutdown(self) -> None:
        """Early clean up of compute backend resources.

        Waits for running tasks to finish.
        """
        if self._thread_pool is not None:
            self._thread_pool.shutdown(wait=True)
            self._thread_pool = None

        super().shutdown()


    def map(self, fn: Callable[..., Any], items: Iterable[Any]) -> List[Any]:
        if self._initialized is False:
            self.initialize()

        return list(self._thread_pool.map(fn, items))
