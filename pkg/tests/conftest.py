from __future__ import annotations

import time
from contextlib import contextmanager

import pytest

from periplectic.center import compute_center
from periplectic.pbw import FULL, QUOTIENT, TRUNCATED, PBWAlgebra
from periplectic.structure import build_structure


@pytest.fixture(scope="session")
def t25():
    return build_structure(2, 5)


@pytest.fixture(scope="session")
def t37():
    return build_structure(3, 7)


@pytest.fixture(scope="session")
def full25(t25):
    return PBWAlgebra(t25, FULL)


@pytest.fixture(scope="session")
def trunc25(t25):
    return PBWAlgebra(t25, TRUNCATED)


@pytest.fixture(scope="session")
def quot25(t25):
    return PBWAlgebra(t25, QUOTIENT)


@pytest.fixture(scope="session")
def center25(t25, quot25):
    return compute_center(t25, quot25)


# ----- acceptance reporting ---------------------------------------------------------

_RESULTS = pytest.StashKey[dict]()


class _Criterion:
    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.failures: list[str] = []
        self.notes: list[str] = []
        self.start = time.perf_counter()

    def check(self, ok: bool, what: str) -> bool:
        if not ok:
            self.failures.append(what)
        return ok

    def note(self, text: str) -> None:
        self.notes.append(text)

    def within(self, seconds: float) -> None:
        elapsed = time.perf_counter() - self.start
        self.check(elapsed < seconds, f"took {elapsed:.1f}s, limit {seconds:.0f}s")
        self.note(f"{elapsed:.1f}s")


@pytest.fixture
def criterion(request):
    results = request.config.stash.setdefault(_RESULTS, {})

    @contextmanager
    def run(number: int, title: str):
        c = _Criterion(number, title)
        try:
            yield c
        except Exception as exc:
            c.failures.append(f"{type(exc).__name__}: {exc}")
            raise
        finally:
            status = "PASS" if not c.failures else "FAIL"
            parts = c.notes + [f"failed: {f}" for f in c.failures]
            line = f"[{status}] criterion {number:>2}: {title}"
            if parts:
                line += " | " + "; ".join(parts)
            results[number] = line
        assert not c.failures, "; ".join(c.failures)

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, {})
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
