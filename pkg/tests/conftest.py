from pathlib import Path

import pytest

from mvkit.fileformat import load_algebra, parse_wajsberg

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# (mv file, wj file or None, proper idempotent count)
REFERENCE_TABLES = {
    "ex22": ("ex22.mv", None, 2),
    "chain4": ("chain4.mv", "chain4.wj", 0),
    "b4": ("b4.mv", "b4.wj", 2),
    "chain6": ("chain6.mv", "chain6.wj", 0),
    "prod6": ("prod6.mv", "prod6.wj", 2),
    "chain8": ("chain8.mv", "chain8.wj", 0),
    "prod8": ("prod8.mv", "prod8.wj", 2),
    "b8": ("b8.mv", "b8.wj", 6),
    "b2": ("b2.mv", None, 0),
}


def fixture_algebra(key):
    return load_algebra(FIXTURES / REFERENCE_TABLES[key][0])


def fixture_wajsberg(key):
    return parse_wajsberg((FIXTURES / REFERENCE_TABLES[key][1]).read_text())


@pytest.fixture(params=sorted(REFERENCE_TABLES))
def ref_algebra(request):
    return fixture_algebra(request.param)


@pytest.fixture
def ex22():
    return fixture_algebra("ex22")


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[number])
