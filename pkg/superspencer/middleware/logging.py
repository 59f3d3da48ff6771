"""Log records shared by every step of one case run."""
import logging
import time
import uuid
from contextlib import contextmanager
from typing import Any, Dict, Iterator, Optional

logger = logging.getLogger(__name__)


class CaseRunContext:
    """Case label, run id and the fields (tower dims, order k) gathered so far."""

    def __init__(self, case: str, run_id: Optional[str] = None):
        self.case = case
        self.run_id = run_id or uuid.uuid4().hex[:12]
        self.start_time = time.perf_counter()
        self.fields: Dict[str, Any] = {}

    @property
    def duration_ms(self) -> int:
        return int((time.perf_counter() - self.start_time) * 1000)

    def extra(self, **kwargs: Any) -> Dict[str, Any]:
        """``extra`` for a log record of this run; kwargs such as k=3 override stored fields."""
        payload = {"run_id": self.run_id, "case": self.case}
        payload.update(self.fields)
        payload.update(kwargs)
        return payload


@contextmanager
def case_run(case: str, run_id: Optional[str] = None) -> Iterator[CaseRunContext]:
    """Bracket a case run with start and finish records; failures are logged and re-raised."""
    context = CaseRunContext(case, run_id)
    logger.info(f"Case {case} started", extra=context.extra())
    try:
        yield context
    except Exception as e:
        logger.error(
            f"Case {case} failed",
            extra=context.extra(duration_ms=context.duration_ms, error=str(e)),
            exc_info=True,
        )
        raise
    logger.info(
        f"Case {case} finished",
        extra=context.extra(duration_ms=context.duration_ms),
    )
