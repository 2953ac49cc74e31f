"""One test per acceptance criterion; each prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines, and
``--tier long`` to stream and verify every good independent set.
"""

import pytest

from hypcolor import certify


@pytest.mark.parametrize("number", sorted(certify.CRITERIA))
def test_criterion(number, ctx, tier, acceptance_lines):
    kwargs = {"tier": tier} if number == 4 else {}
    report = certify.run_criterion(number, ctx, **kwargs)
    acceptance_lines.append(report.line())
    print()
    print(report.line())
    for check in report.checks:
        mark = "ok " if check.ok else "BAD"
        print(f"    {mark} {check.label}: expected {check.expected!r}, computed {check.computed!r}")
    assert report.ok, report.line()
