import pytest

from mubkit.gf import GaloisField

# every field here is small enough for exhaustive element loops
SMALL_CASES = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (5, 2), (3, 3)]


@pytest.fixture(scope="session")
def gf9():
    """GF(9) over the canonical quadratic modulus x^2+x+2."""
    return GaloisField(3, 2, (2, 1, 1))


@pytest.fixture(scope="session")
def gf5():
    """GF(5) with x acting as 3."""
    return GaloisField(5, 1, generator=3)


@pytest.fixture(scope="session")
def small_fields():
    return [GaloisField(p, r) for p, r in SMALL_CASES]
