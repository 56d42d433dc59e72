"""Acceptance gate: one test per criterion, each within its time limit."""

import pytest

from jordanspace.verify import CRITERIA, run


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"{c.number:02d}-{c.title.replace(' ', '-')}")
def test_criterion(criterion):
    outcome = run(criterion)
    print(outcome.line())
    assert outcome.passed, outcome.detail
    assert outcome.seconds < outcome.limit, f"took {outcome.seconds:.1f}s, limit {outcome.limit}s"
