"""Exit criteria 1-10, each at its stated time limit.

Every test records a one-line verdict; conftest prints the collected lines
in the terminal summary. Criteria 4 and 6 are expected to fail as stated
(see the details they report).
"""

import pytest

from rainbowrado import acceptance
from rainbowrado.cli import run

VERDICTS: dict[int, str] = {}


def _record(number, name, passed, extra=""):
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'} ({name}){extra}"
    VERDICTS[number] = line
    print(line)


@pytest.mark.parametrize("criterion", acceptance.CRITERIA, ids=lambda c: f"criterion_{c.number}")
def test_criterion(criterion):
    res = acceptance.run_criterion(criterion, acceptance.DEFAULT_SEED, timing=True)
    _record(criterion.number, criterion.name, res["passed"], f" {res['seconds']}s / {criterion.time_limit}s")
    assert res["within_time_limit"], f"took {res['seconds']} s, limit {criterion.time_limit} s"
    assert res["passed"], res["details"]


def test_criterion_10_selftest_is_byte_identical():
    first = run(["selftest"])
    second = run(["selftest"])
    same = first[1] == second[1] and first[0] == second[0]
    _record(10, "selftest determinism", same)
    assert same
