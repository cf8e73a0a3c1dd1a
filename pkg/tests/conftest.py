import pytest

from crediteq import load_preset


@pytest.fixture(scope="session")
def case_a():
    return load_preset("case-a")


@pytest.fixture(scope="session")
def case_a_small(case_a):
    """Case A at a reduced sample count for cheap interface tests."""
    from crediteq import apply_overrides

    return apply_overrides(case_a, samples=200)
