import pytest

from seidelkit.suites import run_suite

AC_LINES: list[str] = []


@pytest.fixture(scope="session")
def suite():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = run_suite(name)
        return cache[name]

    return get


def pytest_terminal_summary(terminalreporter):
    if AC_LINES:
        terminalreporter.section("acceptance criteria")
        for line in AC_LINES:
            terminalreporter.write_line(line)
