from typing import Any, Callable, Iterable, List

from bellwit.compute.compute_backend import ComputeBackend


class MainProcessCompute(ComputeBackend):
    """Run all work in this process, one item after the other.

    """

    def __init__(self):
        super().__init__(max_workers=1)


    def map(self, fn: Callable[..., Any], items: Iterable[Any]) -> List[Any]:
        return [fn(item) for item in items]
