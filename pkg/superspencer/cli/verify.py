"""Expectation tables and the comparison of run reports against them."""
import json
import logging
from collections import Counter
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import ValidationError

from superspencer.cli.registry import canonical_label
from superspencer.cli.runner import run_case
from superspencer.config import settings
from superspencer.exceptions import ExpectationError
from superspencer.schemas.cases import CaseSpec
from superspencer.schemas.expectations import Expectation, ExpectationTable
from superspencer.schemas.reports import ExpectationDiff, OrderReport, RunReport

logger = logging.getLogger(__name__)

PACKAGED_TABLES = Path(__file__).resolve().parent.parent / "tables"


def tables_dir() -> Path:
    return Path(settings.tables_dir) if settings.tables_dir else PACKAGED_TABLES


def load_tables(directory: Optional[Path] = None) -> List[ExpectationTable]:
    """
    Read every *.json expectation table in a directory.

    Raises:
        ExpectationError: if the directory is missing or a table is malformed
    """
    directory = directory or tables_dir()
    if not directory.is_dir():
        raise ExpectationError(f"Expectation directory {directory} does not exist")
    tables = []
    for path in sorted(directory.glob("*.json")):
        try:
            tables.append(ExpectationTable.model_validate(json.loads(path.read_text())))
        except (OSError, json.JSONDecodeError) as e:
            raise ExpectationError(f"Cannot read expectation table {path.name}: {e}") from e
        except ValidationError as e:
            raise ExpectationError(
                f"Expectation table {path.name} is malformed: {e.error_count()} errors"
            ) from e
    logger.debug(f"Loaded {len(tables)} expectation tables from {directory}")
    return tables


def expectations_by_case(
    tables: Optional[List[ExpectationTable]] = None,
) -> Dict[str, List[Expectation]]:
    grouped: Dict[str, List[Expectation]] = {}
    for table in tables if tables is not None else load_tables():
        for expectation in table.expectations:
            grouped.setdefault(expectation.case, []).append(expectation)
    return grouped


def _weight_key(weight) -> str:
    return str(weight.to_weight())


def _compare_order(expectation: Expectation, order: OrderReport) -> List[ExpectationDiff]:
    diffs = []

    def diff(field: str, expected, actual) -> None:
        diffs.append(
            ExpectationDiff(
                k=expectation.k,
                field=field,
                expected=expected,
                actual=actual,
                source=expectation.source,
            )
        )

    if expectation.expected_dim is not None and expectation.expected_dim != order.dim:
        diff("dim", expectation.expected_dim, order.dim)

    factors = order.module.factors if order.module else []
    if expectation.expected_factors is not None:
        expected = Counter(_weight_key(f.weight) for f in expectation.expected_factors)
        actual = Counter(_weight_key(f.weight) for f in factors)
        if expected != actual:
            diff("factors", sorted(expected.elements()), sorted(actual.elements()))
        else:
            by_weight: Dict[str, List] = {}
            for factor in factors:
                by_weight.setdefault(_weight_key(factor.weight), []).append(factor)
            for wanted in expectation.expected_factors:
                key = _weight_key(wanted.weight)
                found = by_weight[key]
                if wanted.dim is not None and wanted.dim not in [f.dim for f in found]:
                    diff(f"factor_dim[{key}]", wanted.dim, [f.dim for f in found])
                if wanted.parity is not None and wanted.parity not in [f.parity for f in found]:
                    diff(f"factor_parity[{key}]", wanted.parity, [f.parity for f in found])

    if expectation.expected_splitness is not None:
        nonsplit = bool(order.module and order.module.has_nonsplit())
        actual_splitness = "nonsplit" if nonsplit else "split"
        if actual_splitness != expectation.expected_splitness:
            diff("splitness", expectation.expected_splitness, actual_splitness)
    return diffs


def verify_report(report: RunReport, expectations: List[Expectation]) -> List[ExpectationDiff]:
    """
    Compare a report with the expectations of its case.

    Returns:
        One diff per mismatched field; empty when everything matches
    """
    diffs: List[ExpectationDiff] = []
    for expectation in expectations:
        try:
            order = report.order(expectation.k)
        except KeyError:
            diffs.append(
                ExpectationDiff(
                    k=expectation.k,
                    field="order",
                    expected="computed",
                    actual=None,
                    source=expectation.source,
                )
            )
            continue
        diffs.extend(_compare_order(expectation, order))
    if diffs:
        logger.warning(f"Case {report.case}: {len(diffs)} mismatches against expectations")
    else:
        logger.info(f"Case {report.case}: all {len(expectations)} expectations met")
    return diffs


def verify_case(
    spec: CaseSpec,
    kmax: Optional[int] = None,
    expectations: Optional[Dict[str, List[Expectation]]] = None,
) -> RunReport:
    """
    Run a case over the orders its expectations name and attach the diffs.

    Raises:
        ExpectationError: if no expectation exists for the case
    """
    grouped = expectations if expectations is not None else expectations_by_case()
    label = canonical_label(spec.label)
    wanted = grouped.get(label) or grouped.get(spec.label)
    if not wanted:
        raise ExpectationError(f"No expectations recorded for case {spec.label}")
    orders = sorted(set(spec.k_range) | {e.k for e in wanted})
    report = run_case(spec.model_copy(update={"k_range": orders}), kmax)
    report.diffs = verify_report(report, wanted)
    return report
