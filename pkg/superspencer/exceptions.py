"""Exception hierarchy for superspencer.

Every error carries a short machine-readable ``code`` and the process
``exit_code`` the CLI reports for it (2 usage, 3 internal invariant violation).
"""
from typing import Optional


class SuperSpencerError(Exception):
    """Base class for all superspencer errors."""

    code: str = "superspencer_error"
    exit_code: int = 3

    def __init__(self, detail: str, code: Optional[str] = None):
        super().__init__(detail)
        self.detail = detail
        if code:
            self.code = code


class DimensionMismatchError(SuperSpencerError):
    code = "dimension_mismatch"


class ContainmentError(SuperSpencerError):
    code = "containment_violation"


class InvalidParameterError(SuperSpencerError):
    code = "invalid_parameter"
    exit_code = 2


class InvalidCaseLabelError(SuperSpencerError):
    code = "invalid_case_label"
    exit_code = 2


class InvariantViolationError(SuperSpencerError):
    code = "invariant_violation"


class NotInStoredSubspaceError(SuperSpencerError):
    code = "not_in_stored_subspace"


class NonSemisimpleActionError(SuperSpencerError):
    code = "non_semisimple_torus_action"


class NonDominantWeightError(SuperSpencerError):
    code = "non_dominant_weight"
    exit_code = 2


class NotInvariantError(SuperSpencerError):
    code = "not_invariant"


class MissingCentralGeneratorsError(SuperSpencerError):
    code = "missing_central_generators"
    exit_code = 2


class CompositionError(SuperSpencerError):
    code = "composition_failure"


class TruncatedTowerError(SuperSpencerError):
    code = "truncated_tower"


class ExpectationError(SuperSpencerError):
    code = "expectation_error"
    exit_code = 2


class ReportIOError(SuperSpencerError):
    """Raised when a report or matrix dump cannot be written or read."""

    code = "report_io_error"
    exit_code = 2

    def __init__(self, detail: str, path: str):
        super().__init__(f"{detail} (path: {path})")
        self.path = path
