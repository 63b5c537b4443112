import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


@pytest.fixture(scope="session")
def central_values_100k():
    """AFE central values for both families up to conductor 10^5, single-threaded."""
    from artifact.characters import family_slice
    from artifact.lvalues import central_values

    out = {}
    for fam in ("cubic", "quartic"):
        recs = central_values(family_slice(fam, 10**5).members, "afe", threads=1)
        out[fam] = {r.key: r.value for r in recs}
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
