import pytest

from genimpl.reports import SampleSpec


@pytest.fixture
def small_spec() -> SampleSpec:
    """Reduced sample plan for unit tests; acceptance tests use the full one."""
    return SampleSpec(
        grid_n=21, random_count=50, triple_grid_n=7, triple_random_count=50
    )
