import pytest

_results: dict[str, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, title): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    label, title = mark.args
    entry = _results.setdefault(item.nodeid, {"label": label, "title": title, "passed": True, "seconds": 0.0})
    entry["seconds"] += rep.duration
    if rep.failed:
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for entry in _results.values():
        status = "PASS" if entry["passed"] else "FAIL"
        terminalreporter.write_line(f"{status}  {entry['label']:<5} {entry['title']}  ({entry['seconds']:.1f}s)")
