"""Serializing run reports and differential matrices to files."""
import csv
import io
import json
import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import TypeAdapter, ValidationError

from superspencer.exactlin import SparseMatrix
from superspencer.exceptions import ReportIOError
from superspencer.schemas.reports import RunReport

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["case", "k", "dim", "factors", "splitness"]

_reports_adapter = TypeAdapter(List[RunReport])


def to_json(reports: List[RunReport]) -> str:
    """A single report as an object, several as a list; keys sorted."""
    payload = [report.model_dump(mode="json") for report in reports]
    data = payload[0] if len(payload) == 1 else payload
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def to_csv(reports: List[RunReport]) -> str:
    """One row per computed order: case, k, dim H^{k,2}, factor weights, splitness."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        for order in report.orders:
            module = order.module
            factors = ";".join(str(f.weight.to_weight()) for f in module.factors) if module else ""
            if module is None or not module.splitness:
                splitness = ""
            else:
                splitness = "nonsplit" if module.has_nonsplit() else "split"
            writer.writerow([report.case, order.k, order.dim, factors, splitness])
    return buffer.getvalue()


def _write(text: str, path: Optional[Union[str, Path]]) -> str:
    if path is None:
        return text
    try:
        Path(path).write_text(text)
    except OSError as e:
        raise ReportIOError(f"Cannot write output: {e.strerror}", str(path)) from e
    logger.info(f"Wrote {len(text)} bytes to {path}")
    return text


def emit(
    reports: List[RunReport], fmt: str = "json", path: Optional[Union[str, Path]] = None
) -> str:
    """
    Render reports and write them to path when one is given.

    Args:
        reports: Reports to render
        fmt: "json" (full reports) or "csv" (dimension rows)
        path: Output file; None only renders

    Returns:
        The rendered text

    Raises:
        ReportIOError: if the file cannot be written
    """
    if fmt == "json":
        text = to_json(reports)
    elif fmt == "csv":
        text = to_csv(reports)
    else:
        raise ReportIOError(f"Unknown output format '{fmt}'", str(path or "-"))
    return _write(text, path)


def load_reports(path: Union[str, Path]) -> List[RunReport]:
    """
    Read reports written by emit in JSON format.

    Raises:
        ReportIOError: if the file is unreadable or does not hold reports
    """
    try:
        data = json.loads(Path(path).read_text())
    except OSError as e:
        raise ReportIOError(f"Cannot read report: {e.strerror}", str(path)) from e
    except json.JSONDecodeError as e:
        raise ReportIOError(f"Report is not JSON: {e.msg}", str(path)) from e
    try:
        if isinstance(data, dict):
            return [RunReport.model_validate(data)]
        return _reports_adapter.validate_python(data)
    except ValidationError as e:
        raise ReportIOError(f"Report fails schema validation: {e.error_count()} errors", str(path)) from e


def dump_matrix(matrix: SparseMatrix, path: Optional[Union[str, Path]] = None) -> str:
    """Write a matrix in the triplet format: "rows cols nnz", then "r c p/q" lines."""
    return _write(matrix.to_triplet_text(), path)
