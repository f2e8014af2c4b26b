from typing import Iterator

import numpy as np
import pytest

from bellwit import (
    BellTensor,
    Family,
    MainProcessCompute,
    ThreadedCompute,
    build_cosine_tensor,
    build_parity_tensor
)


@pytest.fixture()
def mermin() -> BellTensor:
    return build_cosine_tensor(m=2, delta=0.0)


@pytest.fixture()
def bancal() -> BellTensor:
    return build_cosine_tensor(m=3, delta=-0.5)


@pytest.fixture()
def parity4() -> BellTensor:
    return build_parity_tensor(m=4)


@pytest.fixture()
def custom3() -> BellTensor:
    rng = np.random.default_rng(7)

    return BellTensor(m=3, family=Family.CUSTOM, coeffs=rng.normal(size=(3, 3, 3)))


@pytest.fixture()
def main_compute() -> MainProcessCompute:
    return MainProcessCompute()


@pytest.fixture()
def threaded_compute() -> Iterator[ThreadedCompute]:
    with ThreadedCompute(max_workers=2) as compute:
        yield compute
