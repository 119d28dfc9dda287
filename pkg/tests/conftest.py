import pytest

from specmatch.core import MarketInstance
from specmatch.logger import log
from specmatch.scenario import get_builtin


@pytest.fixture(autouse=True)
def quiet_logger():
    """Keep log output away from captured stderr and reset any log file."""
    log.configure(log_file=None, verbose=False)
    log.enabled = False
    yield
    log.enabled = True
    log.configure(log_file=None, verbose=False)


@pytest.fixture
def eq4_instance() -> MarketInstance:
    """The licensee example with fixed user lists."""
    return get_builtin("eq4-cbrs").fixed_instance()


@pytest.fixture
def table2_instance() -> MarketInstance:
    """The symmetric 3x3 providers with one fixed set of user lists."""
    return MarketInstance.build(
        {"A": ["SU1", "SU2", "SU3"], "B": ["SU2", "SU3", "SU1"], "C": ["SU3", "SU1", "SU2"]},
        {"SU1": ["A", "B", "C"], "SU2": ["B", "A", "C"], "SU3": ["B", "C", "A"]},
    )


@pytest.fixture
def table3_fixed_quota2() -> MarketInstance:
    """Rotated 4x3 providers with quota 2 each and the licensee user lists."""
    return MarketInstance.build(
        {
            "A": ["SU1", "SU2", "SU3", "SU4"],
            "B": ["SU2", "SU3", "SU4", "SU1"],
            "C": ["SU3", "SU4", "SU1", "SU2"],
        },
        {
            "SU1": ["A", "B", "C"],
            "SU2": ["B", "A", "C"],
            "SU3": ["B", "C", "A"],
            "SU4": ["A", "C", "B"],
        },
        quotas={"A": 2, "B": 2, "C": 2},
    )
