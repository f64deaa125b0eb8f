import numpy as np
import pytest

from asymnorm.cone import HalfspaceCone
from asymnorm.oracle import fixture_suite

FIXTURES = fixture_suite()


@pytest.fixture(params=FIXTURES, ids=[f.name for f in FIXTURES])
def fixture(request):
    return request.param


@pytest.fixture
def orthant2():
    return HalfspaceCone([[-1.0, 0.0], [0.0, -1.0]])


@pytest.fixture
def halfplane():
    return HalfspaceCone([[1.0, 0.0]])


def random_proper_cone(rng, n, extra=3):
    """Perturbed nonpositive orthant plus a few extra facets, with an interior apex."""
    normals = -np.eye(n) + 0.3 * rng.normal(size=(n, n))
    more = -np.ones((extra, n)) / np.sqrt(n) + 0.3 * rng.normal(size=(extra, n))
    return HalfspaceCone(np.vstack([normals, more]))


_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        detail = dict(item.user_properties).get("detail", "")
        _ACCEPTANCE.append((marker.args[0], rep.passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line("%s  %s  %s" % ("PASS" if ok else "FAIL", label, detail))
