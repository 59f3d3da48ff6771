"""Case registry, pipeline runner, verification and report emission."""
from superspencer.cli.emit import dump_matrix, emit, load_reports, to_csv, to_json
from superspencer.cli.registry import canonical_label, get_pair, parse_label, shipped_cases
from superspencer.cli.runner import run_case, run_cases, tower_limit
from superspencer.cli.verify import (
    expectations_by_case,
    load_tables,
    verify_case,
    verify_report,
)

__all__ = [
    "canonical_label",
    "dump_matrix",
    "emit",
    "expectations_by_case",
    "get_pair",
    "load_reports",
    "load_tables",
    "parse_label",
    "run_case",
    "run_cases",
    "shipped_cases",
    "to_csv",
    "to_json",
    "tower_limit",
    "verify_case",
    "verify_report",
]
