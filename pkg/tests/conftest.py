import functools

import pytest


@functools.lru_cache(maxsize=None)
def _pipeline(n):
    from hurwitz_family.family.pipeline import run_pipeline

    return run_pipeline(n)


@pytest.fixture(scope="session")
def pipeline():
    """Cached full pipeline result per degree."""
    return _pipeline


_ACCEPTANCE = {}


@pytest.fixture
def record():
    """record(number, passed, detail) stores one acceptance line; returns ``passed``."""

    def _record(number, passed, detail):
        _ACCEPTANCE[number] = (bool(passed), detail)
        return passed

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
