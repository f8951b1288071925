import time

import pytest

from cypres.verifier import sweep_grid

SWEEP_MAX_N = 120

# criterion id -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}
SWEEP_SECONDS: list[float] = []


@pytest.fixture(scope="session")
def sweep120():
    start = time.perf_counter()
    rows = sweep_grid(SWEEP_MAX_N)  # default parallelism
    SWEEP_SECONDS.append(time.perf_counter() - start)
    return rows


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0][2:])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
