import contextlib
import time

import pytest

_RESULTS: dict[int, tuple[str, str, str]] = {}


@contextlib.contextmanager
def _record(number: int, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        _RESULTS[number] = ("FAIL", title, f"{type(exc).__name__}: {str(exc)[:200]}")
        print(f"[criterion {number:2d}] FAIL  {title}")
        raise
    _RESULTS[number] = ("PASS", title, f"{time.perf_counter() - start:.1f}s")
    print(f"[criterion {number:2d}] PASS  {title}")


@pytest.fixture
def criterion():
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, title, note = _RESULTS[number]
        terminalreporter.write_line(f"[criterion {number:2d}] {status}  {title}  ({note})")
