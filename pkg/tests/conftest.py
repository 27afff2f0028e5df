import pytest
from hypothesis import HealthCheck, settings

# container clocks are unreliable; correctness tests should not be time-flaky
settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_acceptance_lines = []


def record_acceptance(line):
    _acceptance_lines.append(line)


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in _acceptance_lines:
        terminalreporter.write_line(line)
