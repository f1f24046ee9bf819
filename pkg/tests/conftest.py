import pytest

from hecke_transfer.root_datum import preset


@pytest.fixture(scope="session")
def gl2():
    return preset("GL", 2)


@pytest.fixture(scope="session")
def a2():
    return preset("A2-sc")


_ACCEPTANCE: list[str] = []


@pytest.fixture
def record():
    """Append one pass/fail line for an acceptance criterion."""

    def _record(label: str, ok: bool, elapsed: float, limit: float, detail: str = ""):
        status = "PASS" if ok and elapsed < limit else "FAIL"
        line = f"{status}  {label}  ({elapsed:.2f}s / {limit:g}s)"
        _ACCEPTANCE.append(line + (f"  {detail}" if detail else ""))
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
