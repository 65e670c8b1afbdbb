from __future__ import annotations

import pytest

_outcomes: dict[str, list[tuple[str, bool]]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for name, value in report.user_properties:
        if name == "criterion":
            _outcomes.setdefault(str(value), []).append((report.nodeid, report.passed))


@pytest.hookimpl(tryfirst=True)
def pytest_collection_modifyitems(items):
    for item in items:
        for mark in item.iter_markers("criterion"):
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_outcomes, key=lambda k: (len(k), k)):
        results = _outcomes[key]
        ok = all(passed for _, passed in results)
        failed = [nodeid.split("::")[-1] for nodeid, passed in results if not passed]
        line = f"criterion {key}: {'PASS' if ok else 'FAIL'} ({len(results)} checks)"
        if failed:
            line += "  failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
