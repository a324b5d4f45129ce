"""Acceptance gate: every criterion must pass at its stated (exact) tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass/fail line
per criterion, or ``homlab selftest`` for the same table from the CLI.
"""

import pytest

from homlab.acceptance import ALL_CRITERIA


@pytest.mark.parametrize("criterion", ALL_CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion):
    result = criterion()
    status = "PASS" if result.passed else "FAIL"
    budget = f" (budget {result.limit:.0f}s)" if result.limit else ""
    print(
        f"{status} criterion {result.number}: {result.name} "
        f"[{result.seconds:.2f}s{budget}] - {result.detail}"
    )
    assert result.passed, f"criterion {result.number} ({result.name}): {result.detail}"
