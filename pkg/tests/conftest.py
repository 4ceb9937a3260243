import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    if call.when == "call":
        item.rep_call = outcome.get_result()


@pytest.fixture
def record(request):
    """Collects one summary line per acceptance criterion."""
    number, title = request.node.get_closest_marker("criterion").args
    state = {"detail": ""}

    def note(detail):
        state["detail"] = detail

    yield note
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    detail = f" ({state['detail']})" if state["detail"] else ""
    ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {title}{detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
