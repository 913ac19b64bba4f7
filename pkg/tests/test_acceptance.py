"""Acceptance suite: every criterion at full scale, one PASS/FAIL line each.

Run under pytest (lines are printed even with output capture on) or
directly with ``python tests/test_acceptance.py``.
"""

import sys

import pytest

from skeingram.verify import ALL_CHECKS


@pytest.mark.parametrize("name", list(ALL_CHECKS))
def test_criterion(name, capsys):
    result = ALL_CHECKS[name]()
    with capsys.disabled():
        print("\n" + result.line())
        for failure in result.failures[:10]:
            print(f"    {failure}")
    assert result.passed, result.failures


if __name__ == "__main__":
    ok = True
    for check in ALL_CHECKS.values():
        result = check()
        print(result.line())
        for failure in result.failures[:10]:
            print(f"    {failure}")
        ok &= result.passed
    sys.exit(0 if ok else 1)
