"""Runs every acceptance criterion at its stated time limit; one PASS/FAIL line each."""

import pytest

from hessenberg.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__)
def test_acceptance(criterion, capsys):
    outcome = criterion()
    with capsys.disabled():
        print("\n" + outcome.line())
    assert outcome.correct, outcome.detail
    assert outcome.seconds < outcome.limit, f"took {outcome.seconds:.3f}s, limit {outcome.limit}s"
