import pytest
from hypothesis import HealthCheck, settings

from compclust.quiver import Quiver, affine_a2, affine_d4, kronecker, linear_quiver

settings.register_profile("ci", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")

ACCEPTANCE = []


@pytest.fixture
def K2():
    return kronecker()


@pytest.fixture
def K3():
    return kronecker(3)


@pytest.fixture
def A3():
    return linear_quiver(3)


@pytest.fixture
def A2t():
    return affine_a2()


@pytest.fixture
def D4t():
    return affine_d4()


@pytest.fixture
def A3t():
    """Affine A3 with a rank-3 tube: path 1->2->3->4 plus 1->4."""
    return Quiver.from_arrows(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
