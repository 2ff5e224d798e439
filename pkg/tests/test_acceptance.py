"""One test per acceptance criterion; each prints a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for the table alone.
"""

import pytest

from addact import acceptance

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("key", list(acceptance.CRITERIA))
def test_criterion(key):
    number, check = acceptance.CRITERIA[key]
    result = check()
    line = f"criterion {number:>2}: {result.line()}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert result.passed, result.failures[:5]


def test_monomiality_refutations_are_extension_independent():
    result = acceptance.check_monomiality()
    refutations = result.detail["a13"]["refutations"]
    assert len(refutations) == 2
    assert all(r["extension_independent"] for r in refutations)


if __name__ == "__main__":
    for number, check in acceptance.CRITERIA.values():
        print(f"criterion {number:>2}: {check().line()}")
