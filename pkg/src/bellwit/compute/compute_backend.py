from typing import Any, Callable, Iterable, List, Optional

from bellwit import exceptions


class ComputeBackend:
    """Base class for ``bellwit`` compute backends.

    Compute backends run independent pieces of work (brute-force chunks, see-saw restarts)
    and hand the results back **in submission order**, so every reduction done by the caller
    is deterministic regardless of how the work was scheduled.

    Base classes must at least implement these methods:

        - ``initialize`` - Create worker resources.
        - ``shutdown`` - Clean up worker resources.
        - ``map`` - Evaluate a function over items and return the results in item order.

    Backends are context managers: ``initialize`` on enter and ``shutdown`` on exit.

    Parameters
    ----------
    max_workers : Optional[int]
        Max number of workers. ``None`` lets the backend decide.
    """


    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max_workers
        self._initialized = False


    def __enter__(self) -> "ComputeBackend":
        self.initialize()

        return self


    def __exit__(self, *exc_info: Any) -> None:
        self.shutdown()


    def initialize(self) -> None:
        """Create worker resources.

        Called lazily by ``map`` if it was not called explicitly.
        """
        self._initialized = True


    def shutdown(self) -> None:
        """Clean up worker resources.
        """
        self._initialized = False


    def map(self, fn: Callable[..., Any], items: Iterable[Any]) -> List[Any]:
        """Evaluate ``fn(item)`` for every item.

        ``fn`` must be a module level function and the items picklable
        so that process based backends can ship them to workers.

        Parameters
        ----------
        fn : Callable[..., Any]
            Function of one argument.
        items : Iterable[Any]
            Arguments.

        Returns
        -------
        List[Any]
            Results in the same order as ``items``.

        Raises
        ------
        bellwit.exceptions.MethodNotImplementedError
            Sub-classes must implement this method.
        """
        raise exceptions.MethodNotImplementedError()
