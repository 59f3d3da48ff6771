"""Tests for the pydantic report, case and error models."""
import pytest
from pydantic import ValidationError

from superspencer.exceptions import InvalidCaseLabelError, ReportIOError
from superspencer.schemas.cases import Analyses, CaseSpec
from superspencer.schemas.errors import create_error_response
from superspencer.schemas.expectations import Expectation
from superspencer.schemas.reports import (
    FactorModel,
    ModuleReport,
    RunReport,
    TowerReport,
    WeightCount,
    WeightModel,
)
from superspencer.superalg import Weight


def make_run_report(**overrides) -> RunReport:
    data = dict(
        schema_version="1",
        case="spe:2",
        g0="spe(2)",
        g0_superdim=[3, 4],
        gminus1_superdim=[2, 2],
        faithful=True,
        tower=TowerReport(dims={-1: 4, 0: 7, 1: 0}, superdims={}, stabilized=True, truncated=False),
    )
    data.update(overrides)
    return RunReport(**data)


def test_case_spec_normalizes_orders():
    """Test that orders are sorted and deduplicated."""
    spec = CaseSpec(label="spe:3", k_range=[2, 1, 2])
    assert spec.k_range == [1, 2]
    assert spec.analyses == Analyses()


@pytest.mark.parametrize("orders", [[], [0, 1]])
def test_case_spec_rejects_bad_orders(orders):
    """Test that empty ranges and orders below one are rejected."""
    with pytest.raises(ValidationError):
        CaseSpec(label="spe:3", k_range=orders)


def test_weight_model_round_trip():
    """Test conversion between weights and their JSON model."""
    weight = Weight.make([2, "1/2"], [-1])
    model = WeightModel.from_weight(weight)
    assert model.eps == ["2", "1/2"]
    assert model.to_weight() == weight


def test_module_report_dimensions_must_add_up():
    """Test the factor and multiplicity sums against dim."""
    weight = WeightModel(eps=["1", "0"])
    factor = FactorModel(weight=weight, dim=2, parity="even", certified=True)
    ModuleReport(dim=2, factors=[factor])
    with pytest.raises(ValidationError):
        ModuleReport(dim=3, factors=[factor])
    with pytest.raises(ValidationError):
        ModuleReport(dim=3, weight_multiplicities=[WeightCount(weight=weight, count=2)])


def test_run_report_order_lookup():
    """Test lookup of computed orders by k."""
    report = make_run_report()
    with pytest.raises(KeyError):
        report.order(1)


def test_expectation_requires_a_source():
    """Test that blank sources are rejected."""
    with pytest.raises(ValidationError):
        Expectation(case="pe:2", k=1, expected_dim=0, source="  ")


@pytest.mark.parametrize(
    "source",
    ["order-one vanishing for pe(n)", "remark: order-one vanishing", "theorem:", "table: x"],
)
def test_expectation_source_needs_a_kind_and_statement(source):
    """Test that sources without a known kind prefix and a statement are rejected."""
    with pytest.raises(ValidationError):
        Expectation(case="pe:2", k=1, expected_dim=0, source=source)


def test_expectation_source_with_kind_is_accepted():
    """Test a source naming the kind of statement it cites."""
    expectation = Expectation(
        case="pe:2", k=1, expected_dim=0, source="theorem: order-one vanishing for pe(n)"
    )
    assert expectation.source.startswith("theorem")


def test_error_response_for_package_errors():
    """Test the payload of a usage error."""
    response = create_error_response(InvalidCaseLabelError("Unknown case label 'x'"))
    assert response == {
        "detail": "Unknown case label 'x'",
        "code": "invalid_case_label",
        "exit_code": 2,
    }


def test_error_response_carries_path_and_items():
    """Test that IO errors name their path and item lists pass through."""
    response = create_error_response(
        ReportIOError("Cannot write output", "/tmp/out.json"), [{"loc": ["k"], "msg": "bad"}]
    )
    assert response["path"] == "/tmp/out.json"
    assert response["errors"] == [{"loc": ["k"], "msg": "bad"}]


def test_error_response_for_unexpected_errors():
    """Test that foreign exceptions map to the internal exit code."""
    response = create_error_response(RuntimeError("boom"))
    assert response == {"detail": "boom", "exit_code": 3}
