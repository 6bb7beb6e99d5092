import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from poincare_cascade.rootsys import all_types, build  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"

_criteria: list[tuple[int, str, str]] = []
_marked: dict[str, tuple] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion carried by this test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _marked[item.nodeid] = mark.args


def pytest_runtest_logreport(report):
    if report.nodeid in _marked and (report.when == "call" or report.failed):
        n, title = _marked.pop(report.nodeid)
        _criteria.append((n, title, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, verdict in sorted(_criteria):
        terminalreporter.write_line(f"acceptance criterion {n} ({title}): {verdict}")


def _ids(types):
    return [str(t) for t in types]


TYPES_8 = all_types(8)
TYPES_6 = all_types(6)
TYPES_5 = all_types(5)


@pytest.fixture(params=TYPES_8, ids=_ids(TYPES_8))
def rs8(request):
    return build(request.param)


@pytest.fixture(params=TYPES_6, ids=_ids(TYPES_6))
def rs6(request):
    return build(request.param)


@pytest.fixture(params=TYPES_5, ids=_ids(TYPES_5))
def rs5(request):
    return build(request.param)


@pytest.fixture
def golden_dir():
    return GOLDEN
