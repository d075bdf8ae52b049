"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import pytest

from fatlab.acceptance import CRITERIA, Context, run_criterion


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA], ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, capsys):
    res = run_criterion(number, Context(seed=7))
    with capsys.disabled():
        print("\n" + res.line())
    failed = [c.id for c in res.report.claims if not c.passed]
    assert res.passed, failed
