import time

import pytest

CRITERIA = {}  # number -> (title, budget seconds, [(nodeid, passed, seconds)])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, budget): acceptance criterion with a time budget")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    start = time.perf_counter()
    yield
    item.user_properties.append(("elapsed", time.perf_counter() - start))


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = dict(report.user_properties).get("criterion")
    if marker is None:
        return
    number, title, budget = marker
    elapsed = dict(report.user_properties).get("elapsed", 0.0)
    expected_failure = report.skipped and hasattr(report, "wasxfail")
    status = "xfail" if expected_failure else ("pass" if report.passed else "fail")
    CRITERIA.setdefault(number, (title, budget, []))[2].append((report.nodeid, status, elapsed))


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, budget, runs = CRITERIA[number]
        elapsed = sum(seconds for _, _, seconds in runs)
        statuses = [status for _, status, _ in runs]
        ok = all(status == "pass" for status in statuses) and elapsed <= budget
        note = ""
        if "xfail" in statuses and "fail" not in statuses:
            note = " [literal statement fails as recorded; restricted form passes]"
        elif elapsed > budget:
            note = " [over time budget]"
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {verdict}  {title} ({elapsed:.2f}s of {budget}s){note}")
