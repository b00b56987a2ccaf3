"""Acceptance bookkeeping: tests marked ``criterion(n, title)`` get one
PASS/FAIL line each in the terminal summary, plus any detail they record."""

import pytest

_RESULTS = {}
_DETAILS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture
def record_detail(request):
    def record(text):
        _DETAILS[request.node.nodeid] = text

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _RESULTS.setdefault(number, {"title": title, "ok": True, "ran": False, "nodes": []})
    if rep.when == "call" or rep.failed:
        entry["ran"] = True
        entry["ok"] &= rep.passed
        entry["nodes"].append(item.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_RESULTS):
        e = _RESULTS[number]
        verdict = "PASS" if e["ok"] and e["ran"] else "FAIL"
        details = "; ".join(_DETAILS[n] for n in e["nodes"] if n in _DETAILS)
        line = f"criterion {number:>2}: {verdict}  {e['title']}"
        tr.write_line(line + (f"  [{details}]" if details else ""))
