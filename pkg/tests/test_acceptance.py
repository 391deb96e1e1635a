"""Acceptance gate: one pass/fail line per criterion, printed and asserted."""

import pytest

from antiramsey.acceptance import CRITERIA, DEFAULT_SEED, run_criterion


def _id(crit):
    return f"criterion-{crit.number}-{'stretch' if 'stretch' in crit.title else 'main'}"


@pytest.mark.parametrize("crit", CRITERIA, ids=_id)
def test_criterion(crit, capsys):
    res = run_criterion(crit, DEFAULT_SEED)
    with capsys.disabled():
        print("\n" + res.line())
    assert res.passed, res.detail
