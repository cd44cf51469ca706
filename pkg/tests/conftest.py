import pytest

from dblgpd import catalog as C

# criterion number -> (passed, seconds, limit); filled by test_acceptance
ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def catalog():
    return C.standard_catalog()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, secs, limit = ACCEPTANCE[n]
        lim = f" (limit {limit:g} s)" if limit else ""
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {secs:.2f} s{lim}")
