from pathlib import Path

import pytest
from hypothesis import settings

from kkschur.cores import LevelContext

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def ctx2():
    return LevelContext.for_level(2)


@pytest.fixture
def ctx3():
    return LevelContext.for_level(3)


@pytest.fixture
def ctx4():
    return LevelContext.for_level(4)


# Filled by the acceptance tests, printed once at the end of the run.
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
