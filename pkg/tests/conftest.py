import pytest

from csq import growth


@pytest.fixture
def fresh_caches():
    """Clear memoized growth-process data before and after a test that
    swaps out internals."""
    growth.clear_caches()
    yield
    growth.clear_caches()


# lines collected by test_acceptance.py, shown after the test run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
