"""The case pipeline: pair, tower, complexes, cohomology, module reports."""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import List, Optional

from superspencer.cli.registry import get_pair
from superspencer.config import settings
from superspencer.exceptions import InvariantViolationError
from superspencer.middleware.logging import case_run
from superspencer.prolong import ProlongationTower, cartan_prolong
from superspencer.repmod import composition_report
from superspencer.schemas.cases import CaseSpec
from superspencer.schemas.reports import InvariantChecks, OrderReport, RunReport, TowerReport
from superspencer.services.cache import computation_cache
from superspencer.spencer import SpencerComplex, spencer_cohomology

logger = logging.getLogger(__name__)


def tower_limit(spec: CaseSpec, kmax: Optional[int] = None) -> int:
    """
    Last order to prolong to.

    H^{k,2} needs g_{k−1} and the rank identity needs g_k, so the default is the
    largest requested k. An explicit kmax (flag, then settings) caps it.
    """
    needed = max(spec.k_range)
    cap = kmax if kmax is not None else settings.kmax
    return needed if cap is None else min(needed, cap)


def get_tower(label: str, limit: int) -> ProlongationTower:
    return computation_cache.get_or_build(
        "tower", label, lambda: cartan_prolong(get_pair(label), limit), {"limit": limit}
    )


def tower_report(tower: ProlongationTower) -> TowerReport:
    dims = {}
    superdims = {}
    for k in range(-1, tower.top + 1):
        space = tower.space(k)
        dims[k] = space.dim
        superdims[k] = list(space.superdim)
    return TowerReport(
        dims=dims, superdims=superdims, stabilized=tower.stabilized, truncated=tower.truncated
    )


def check_complex(tower: ProlongationTower, k: int) -> InvariantChecks:
    """
    Build the complex at order k and assert ∂∘∂ = 0 and g_0-equivariance.

    Raises:
        InvariantViolationError: if either identity fails
    """
    complex_ = SpencerComplex(tower, k)
    square_zero = complex_.check_square_zero()
    failure = complex_.check_equivariance()
    rank_identity = complex_.check_rank_identity() if tower.has(k) else None
    if not square_zero:
        raise InvariantViolationError(f"{tower.label}: ∂∘∂ ≠ 0 at k={k}")
    if failure is not None:
        x, s = failure
        raise InvariantViolationError(
            f"{tower.label}: ∂^{{{k},{s}}} is not equivariant under g0 element {x}"
        )
    if rank_identity is False:
        raise InvariantViolationError(f"{tower.label}: rank identity fails at k={k}")
    return InvariantChecks(square_zero=square_zero, equivariant=True, rank_identity=rank_identity)


def run_case(spec: CaseSpec, kmax: Optional[int] = None) -> RunReport:
    """
    Run the full pipeline for one case.

    Args:
        spec: Case label and orders
        kmax: Optional cap on the prolongation, overriding settings.kmax

    Returns:
        The run report; orders beyond a truncated tower are left out

    Raises:
        InvalidCaseLabelError: if the label does not parse
        InvariantViolationError: if a complex fails its identities
    """
    with case_run(spec.label) as run:
        started = time.perf_counter()
        pair = get_pair(spec.label)
        tower = get_tower(spec.label, tower_limit(spec, kmax))
        run.fields["tower_dims"] = tower.dims()
        logger.info(f"Tower of {spec.label}: {tower.dims()}", extra=run.extra())

        orders: List[OrderReport] = []
        for k in spec.k_range:
            if not tower.has(k - 1):
                logger.warning(
                    f"Skipping k={k} for {spec.label}: tower truncated at {tower.top}",
                    extra=run.extra(k=k),
                )
                continue
            checks = check_complex(tower, k) if settings.check_invariants else None
            if not spec.analyses.cohomology:
                orders.append(OrderReport(k=k, dim=0, kernel_dim=0, image_dim=0, checks=checks))
                continue
            cohomology = spencer_cohomology(tower, k, 2)
            module = None
            if spec.analyses.report and cohomology.dim:
                module = composition_report(cohomology.module(), frame=pair.frame)
            orders.append(
                OrderReport(
                    k=k,
                    dim=cohomology.dim,
                    kernel_dim=cohomology.kernel.dim,
                    image_dim=cohomology.image.dim,
                    checks=checks,
                    module=module,
                )
            )
            logger.info(
                f"H^{k},2 of {spec.label} has dim {cohomology.dim}", extra=run.extra(k=k)
            )

        report = RunReport(
            schema_version=settings.report_schema_version,
            case=pair.label,
            g0=pair.g0.name,
            g0_superdim=list(pair.g0.superdim),
            gminus1_superdim=list(pair.gminus1.module.superdim),
            faithful=pair.faithful,
            tower=tower_report(tower),
            orders=orders,
        )
        if settings.include_timing:
            report.timing_ms = int((time.perf_counter() - started) * 1000)
        return report


def run_cases(
    specs: List[CaseSpec], kmax: Optional[int] = None, threads: Optional[int] = None
) -> List[RunReport]:
    """
    Run several cases, in worker processes when more than one thread is allowed.

    Reports come back in the order of specs.
    """
    workers = min(threads or settings.threads, len(specs))
    if workers <= 1:
        return [run_case(spec, kmax) for spec in specs]
    logger.info(f"Running {len(specs)} cases on {workers} processes")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(partial(run_case, kmax=kmax), specs))
