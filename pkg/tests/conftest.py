import pytest

from torusk3 import fixtures
from torusk3.report import verify_paper

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def paper_report():
    return verify_paper()


@pytest.fixture(scope="session")
def deltas():
    return {n: fixtures.polytope(n) for n in ("Delta1", "Delta2", "Delta3")}


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for an acceptance criterion."""

    def record(number: int, title: str, failures: list[str]):
        status = "PASS" if not failures else "FAIL"
        detail = "" if not failures else ": " + "; ".join(failures)
        ACCEPTANCE_LINES[number] = f"criterion {number:>2} {status}  {title}{detail}"
        print(ACCEPTANCE_LINES[number])
        assert not failures, "; ".join(failures)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
