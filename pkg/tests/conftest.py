import pytest
from hypothesis import HealthCheck, settings

from picardtorus import families
from picardtorus.numberfield import field_new

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# beta: the root of x^3 - x - 1 in the upper half plane, 62 digits from an independent root finder
BETA_RE = "-0.66235897862237301298045442723904867036720202845086668226700753"
BETA_IM = "0.56227951206230124389918214490937306149784300289578393983839046"
BETA_DIGITS = 62


@pytest.fixture(scope="session")
def gaussian():
    return field_new([1, 0, 1], ("0", "1"))


@pytest.fixture(scope="session")
def cubic():
    return field_new([-1, -1, 0, 1], ("-0.66", "0.56"))


@pytest.fixture(scope="session")
def zeta8():
    return families.preset_field("zeta8")


@pytest.fixture(scope="session")
def rho_zero_instance():
    return families.rho_zero()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
