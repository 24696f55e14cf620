import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion.

    Usage: ``with criterion("3", "equality taxonomy"): ...``
    """
    from contextlib import contextmanager

    @contextmanager
    def record(number, title):
        try:
            yield
        except BaseException as e:
            ACCEPTANCE_LINES.append(f"FAIL  criterion {number}: {title} ({type(e).__name__})")
            raise
        ACCEPTANCE_LINES.append(f"PASS  criterion {number}: {title}")

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
