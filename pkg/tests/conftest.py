import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from strad.quiver import build_a_nm  # noqa: E402
from strad.verify import table_for  # noqa: E402


@pytest.fixture(scope="session")
def a32():
    return build_a_nm(3, 2)


@pytest.fixture(scope="session")
def t32():
    return table_for(3, 2)


@pytest.fixture(scope="session")
def t20():
    return table_for(2, 0)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        ok, detail = RESULTS[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}")
