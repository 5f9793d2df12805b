"""Acceptance criteria 1-10, one pass/fail line each (visible with ``pytest -s`` or ``-v``)."""
import subprocess
import sys
import time

import pytest

from eternalbar import selftest

CRITERIA = {i + 1: fn for i, fn in enumerate(selftest.CRITERIA)}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    rep = CRITERIA[number]()
    with capsys.disabled():
        print(f"\ncriterion {rep.line()}")
    assert rep, rep.line()


def test_criterion_10_selftest_wall_time(capsys):
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "eternalbar", "selftest"], capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    ok = proc.returncode == 0 and elapsed < 60
    with capsys.disabled():
        print(f"\ncriterion 10 selftest wall time: {'pass' if ok else 'FAIL'} ({elapsed:.2f}s of 60s)")
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert elapsed < 60


def test_tagged_examples():
    rep = selftest.examples_report()
    print(f"\n{rep.line()}")
    assert rep, rep.line()
