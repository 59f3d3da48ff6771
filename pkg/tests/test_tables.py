"""Full verification of the shipped expectation tables (slow)."""
import pytest

from superspencer.cli import expectations_by_case, verify_case
from superspencer.schemas.cases import CaseSpec

CASES = sorted(expectations_by_case())


@pytest.mark.slow
@pytest.mark.parametrize("label", CASES)
def test_shipped_expectations(label):
    """Test every recorded order of a case against its table."""
    report = verify_case(CaseSpec(label=label, k_range=[1]))
    assert report.diffs == []
    for order in report.orders:
        if order.module is not None:
            assert sum(factor.dim for factor in order.module.factors) == order.dim
        assert order.checks.square_zero and order.checks.equivariant
