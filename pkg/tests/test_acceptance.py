"""Runs every acceptance criterion at full size and prints one line per criterion."""

import pytest

from bepoly import acceptance


def _report(capsys, result):
    with capsys.disabled():
        print("\n" + result.line())


@pytest.mark.parametrize("criterion", acceptance.CRITERIA[:-1], ids=lambda fn: fn.__name__)
def test_criterion(criterion, capsys):
    result = criterion(quick=False)
    _report(capsys, result)
    assert result.passed, result.failures


def test_criterion_11(capsys):
    result = acceptance.criterion_11(quick=False, subprocess_selftest=True)
    _report(capsys, result)
    assert result.passed, result.failures
