import pytest

# filled by tests/test_acceptance.py: criterion id -> (passed, detail)
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def ring_R():
    from arfs2 import AffineSemigroup
    return AffineSemigroup([(5, 0), (1, 4), (0, 5)])


@pytest.fixture(scope="session")
def ring_RA():
    from arfs2 import AffineSemigroup
    return AffineSemigroup([(5, 0), (1, 4), (0, 5), (9, 6), (8, 7), (4, 11)])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k[2:])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{key} {'PASS' if ok else 'FAIL'} {detail}")
