import numpy as np
import pytest

import tfaug as T


def rand_signal(rng, d):
    return rng.standard_normal(d) + 1j * rng.standard_normal(d)


def rand_unit(rng, d):
    f = rand_signal(rng, d)
    return f / np.linalg.norm(f)


def rand_dataset(rng, n, d):
    ds = T.DataSet(tuple(rand_signal(rng, d) for _ in range(n)))
    return T.normalize_dataset(ds)


def rand_state(rng, n, d):
    """Random positive trace-one operator (a random data operator)."""
    return T.data_operator(rand_dataset(rng, n, d))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
