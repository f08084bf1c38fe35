import pytest

_acceptance: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (passed, detail)."""
    name = request.node.name

    def record(passed: bool, detail: str = "") -> None:
        _acceptance[name] = (passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, (passed, detail) in _acceptance.items():
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
