"""One test per acceptance criterion; each prints its pass/fail line."""

import io

import pytest

from sgap.acceptance import SUITES, run_suite, suite_names
from sgap.cli import run_cli


@pytest.mark.parametrize("name", suite_names())
def test_criterion(name, capsys):
    result = run_suite(name)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


def test_every_criterion_is_registered():
    assert sorted(number for number, _, _ in SUITES.values()) == list(range(1, 15))


def test_oracle_command_runs_all_sweeps():
    out = io.StringIO()
    assert run_cli(["oracle", "--check", "all"], stdout=out) == 0
    lines = out.getvalue().splitlines()
    assert len(lines) == 13 and all(line.startswith("[PASS]") for line in lines)
