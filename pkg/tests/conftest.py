import pytest

ACCEPTANCE_LINES: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    label = request.node.get_closest_marker("criterion").args[0]
    ACCEPTANCE_LINES[label] = f"[FAIL] {label}"
    state = {}
    yield state
    ACCEPTANCE_LINES[label] = f"[PASS] {label}: {state.get('detail', '')}".rstrip(": ")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
