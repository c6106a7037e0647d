"""The eleven acceptance criteria at full scale, one printed line each.

Run ``pytest tests/test_acceptance.py -s`` to see the table.
"""

import pytest

from grothkit.acceptance import CRITERIA, format_line


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, len(CRITERIA) + 1)])
def test_criterion(criterion):
    result = criterion()
    print(format_line(result))
    assert result.passed, format_line(result)
