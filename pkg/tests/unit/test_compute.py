import math

import pytest

from bellwit import ComputeBackend, MainProcessCompute, MultiprocessCompute, ThreadedCompute
from bellwit import exceptions


def test_base_map_not_implemented():
    with pytest.raises(exceptions.MethodNotImplementedError):
        ComputeBackend().map(abs, [1])


def test_main_process_map(main_compute):
    assert main_compute.max_workers == 1
    assert main_compute.map(abs, [-3, 2, -1]) == [3, 2, 1]


def test_threaded_map_keeps_order(threaded_compute):
    items = list(range(-50, 50))
    assert threaded_compute.map(abs, items) == [abs(i) for i in items]


def test_threaded_lazy_initialize():
    compute = ThreadedCompute(max_workers=2)
    assert compute._initialized is False
    assert compute.map(math.sqrt, [4.0, 9.0]) == [2.0, 3.0]
    assert compute._initialized is True
    pool = compute._thread_pool
    assert compute.map(math.sqrt, [1.0]) == [1.0]
    assert compute._thread_pool is pool
    compute.shutdown()
    assert compute._initialized is False
    assert compute._thread_pool is None
    assert compute.map(math.sqrt, [16.0]) == [4.0]
    assert compute._initialized is True
    compute.shutdown()


def test_multiprocess_map_keeps_order():
    with MultiprocessCompute(max_workers=2) as compute:
        assert compute._initialized is True
        assert compute.map(math.sqrt, [16.0, 1.0, 4.0]) == [4.0, 1.0, 2.0]

    assert compute._initialized is False
    assert compute._process_pool is None


@pytest.mark.parametrize("backend", [ThreadedCompute, MultiprocessCompute])
def test_invalid_workers(backend):
    with pytest.raises(exceptions.InvalidParameterError):
        backend(max_workers=0)


def test_default_workers():
    assert ThreadedCompute().max_workers >= 1
    assert MultiprocessCompute().max_workers >= 1
