import mpmath as mp
import pytest


@pytest.fixture(scope="session")
def mp40():
    """mpmath context at 40 digits for oracle comparisons."""
    old = mp.mp.dps
    mp.mp.dps = 40
    yield mp
    mp.mp.dps = old


def rel_err(got, ref):
    ref = float(ref)
    if ref == 0.0:
        return abs(float(got))
    return abs(float(got) - ref) / abs(ref)
