import pytest

_results = {}


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        detail = dict(report.user_properties).get("detail", "")
        _results[crit] = ("PASS" if report.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_results):
        status, detail = _results[crit]
        terminalreporter.write_line(f"criterion {crit}: {status}  {detail}")


@pytest.fixture
def criterion(request, record_property):
    """Tag an acceptance test with its criterion number and collect a detail line."""
    marker = request.node.get_closest_marker("acceptance")
    record_property("criterion", marker.args[0])

    def detail(text):
        record_property("detail", text)
    return detail
