import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): acceptance criterion number n")


def pytest_terminal_summary(terminalreporter):
    outcomes = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            n = getattr(rep, "acceptance", None)
            if n is None or rep.when != "call" and key != "error":
                continue
            outcomes.setdefault(n, []).append(key == "passed")
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(outcomes):
        status = "PASS" if all(outcomes[n]) else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status} ({len(outcomes[n])} checks)")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        rep.acceptance = marker.args[0]
