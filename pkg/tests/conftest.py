import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def golay():
    from weightstar import family

    return family("ternary_golay")


@pytest.fixture(scope="session")
def trace_code():
    from weightstar import family

    return family("trace_f729")


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    n = mark.args[0]
    ok = rep.passed if rep.when == "call" else False
    _ACCEPTANCE[n] = _ACCEPTANCE.get(n, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"ACC {n}: {'PASS' if _ACCEPTANCE[n] else 'FAIL'}")
