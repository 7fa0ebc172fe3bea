"""Acceptance scorecard, one test per criterion.

Each test prints a single pass/fail line (visible under `pytest -s`) and
asserts the criterion outcome.  The same checks back the `lcgspec
verify-paper` subcommand.
"""

import pytest

from lcgspec.scorecard import run_all


@pytest.fixture(scope="module")
def results():
    return {r.cid: r for r in run_all()}


@pytest.mark.parametrize("cid", range(1, 13))
def test_criterion(cid, results):
    r = results[cid]
    status = "PASS" if r.passed else "FAIL"
    print(f"criterion {cid:2d}: {status} ({r.elapsed:.2f} s) {r.title}: {r.detail}")
    assert r.passed, f"criterion {cid} failed: {r.detail}"
