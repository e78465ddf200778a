import pytest

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the caller asserts afterwards."""

    def record(key: str, passed: bool, detail: str = "") -> bool:
        ACCEPTANCE[key] = (passed, detail)
        status = "PASS" if passed else "FAIL"
        print(f"[{status}] criterion {key}: {detail}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    order = sorted(ACCEPTANCE, key=lambda k: (int(k.rstrip("abc")), k))
    for key in order:
        passed, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {key}: {detail}")
