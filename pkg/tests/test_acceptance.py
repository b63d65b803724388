"""Acceptance criteria 1-10, each at its fixed tolerance.

Run with ``pytest -s tests/test_acceptance.py`` to see one pass/fail line per
criterion; the same checks back ``wong-lab selftest``.
"""

import pytest

from wonglab import acceptance as acc

# collected for the terminal summary in conftest.py
LINES = {}


@pytest.fixture(scope="module")
def sweep():
    return acc._default_sweep()


CRITERIA = {
    1: lambda sweep: acc.group_law(),
    2: lambda sweep: acc.kernel_unit_mass(),
    3: lambda sweep: acc.contraction(),
    4: lambda sweep: acc.decomposition_identity(),
    5: lambda sweep: acc.wong_inequality(sweep),
    6: lambda sweep: acc.partwise_young(sweep),
    7: lambda sweep: acc.tradeoff(),
    8: lambda sweep: acc.inclusion_witnesses(),
    9: lambda sweep: acc.duality(),
    10: lambda sweep: acc.determinism(),
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, sweep):
    result = CRITERIA[number](sweep)
    print(result.line())
    LINES[number] = result.line()
    assert result.number == number
    assert result.passed, result.line()


def test_tradeoff_csv_written(tmp_path):
    result = acc.tradeoff(out_dir=tmp_path)
    text = (tmp_path / "tradeoff.csv").read_text().splitlines()
    assert text[0] == "R,epsilon,C" and len(text) == 8
    assert result.passed
