import time

SUITE_LIMIT_SECONDS = 60.0
_start = time.perf_counter()


def pytest_sessionstart(session):
    global _start
    _start = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.perf_counter() - _start
    ok = elapsed < SUITE_LIMIT_SECONDS
    terminalreporter.write_line(
        f"{'PASS' if ok else 'FAIL'}  full test suite under {SUITE_LIMIT_SECONDS:.0f} s  [{elapsed:.2f}s]"
    )


def pytest_sessionfinish(session, exitstatus):
    if time.perf_counter() - _start >= SUITE_LIMIT_SECONDS and session.exitstatus == 0:
        session.exitstatus = 1
