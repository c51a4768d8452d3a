import time
from contextlib import contextmanager

import pytest

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def criterion(request):
    """Context manager recording one PASS/FAIL line per acceptance criterion."""
    lines = request.config.stash[_LINES]

    @contextmanager
    def run(number: int, title: str):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            lines.append((number, f"criterion {number:2d} FAIL  {title}: {exc!r:.300}"))
            print(lines[-1][1])
            raise
        elapsed = time.perf_counter() - start
        lines.append((number, f"criterion {number:2d} PASS  {title} ({elapsed:.2f}s)"))
        print(lines[-1][1])

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash[_LINES]
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
