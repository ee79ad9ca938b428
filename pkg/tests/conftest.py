import os

# keep the suite single-threaded so the sweep-runtime criterion measures
# one core; must happen before numpy loads
os.environ.setdefault("OMP_NUM_THREADS", "1")
os.environ.setdefault("OPENBLAS_NUM_THREADS", "1")
os.environ.setdefault("MKL_NUM_THREADS", "1")

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def order_fit(ns, errs) -> float:
    """Least-squares convergence order from grid sizes and errors."""
    lo = np.log(np.asarray(ns, dtype=float))
    le = np.log(np.asarray(errs, dtype=float))
    return float(-np.polyfit(lo, le, 1)[0])
