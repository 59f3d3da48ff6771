"""Composition series of finite-dimensional g_0-modules."""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from superspencer.exactlin import Subspace, Vector, format_scalar
from superspencer.exceptions import CompositionError
from superspencer.repmod.highest import HighestVector, generate_submodule, highest_vectors
from superspencer.repmod.splitting import detect_splitting
from superspencer.repmod.weights import label_eigenvalues
from superspencer.schemas.reports import (
    FactorModel,
    HighestVectorModel,
    ModuleReport,
    SplitnessModel,
    WeightCount,
    WeightModel,
    parity_label,
)
from superspencer.superalg import ModuleAction, Weight, WeightFrame

logger = logging.getLogger(__name__)


@dataclass
class Factor:
    weight: Weight
    dim: int
    parity: int
    certified: bool


@dataclass
class CompositionSeries:
    """F_0 = 0 ⊂ F_1 ⊂ … ⊂ F_r = M with F_i/F_{i−1} the i-th factor."""

    action: ModuleAction
    filtration: List[Subspace] = field(default_factory=list)
    factors: List[Factor] = field(default_factory=list)


def _choose(action: ModuleAction, candidates: List[HighestVector]) -> Tuple[HighestVector, Subspace]:
    """Smallest generated submodule; ties go to the lexicographically largest weight."""
    best: Optional[Tuple[HighestVector, Subspace]] = None
    for hv in candidates:
        sub = generate_submodule(action, [hv.vector])
        if best is None:
            best = (hv, sub)
            continue
        if sub.dim < best[1].dim or (sub.dim == best[1].dim and hv.weight > best[0].weight):
            best = (hv, sub)
    return best


def minimal_submodule(action: ModuleAction) -> Tuple[Subspace, HighestVector, bool]:
    """
    A minimal nonzero submodule found from highest vectors.

    The submodule is certified irreducible when each (parity, weight) block of
    its highest vectors is one-dimensional: a proper graded submodule would
    contain one of those vectors, and each of them generates the whole.

    Returns:
        (submodule, its top highest vector, True when certified irreducible)

    Raises:
        CompositionError: if a nonzero module has no highest vector
    """
    candidates = highest_vectors(action)
    if not candidates:
        raise CompositionError(f"No highest vector found in {action.name}")
    hv, sub = _choose(action, candidates)
    while True:
        inner = action.restrict(sub)
        inner_candidates = highest_vectors(inner)
        inner_hv, inner_sub = _choose(inner, inner_candidates)
        if inner_sub.dim == sub.dim:
            top = max(inner_candidates, key=lambda c: c.weight)
            vector = sub.vector(top.vector)
            blocks = Counter((c.parity, c.weight) for c in inner_candidates)
            certified = all(count == 1 for count in blocks.values())
            return sub, HighestVector(vector, top.weight, top.parity), certified
        sub = Subspace.from_vectors(action.dim, [sub.vector(row) for row in inner_sub.basis])


def _to_quotient(vectors: List[Vector], modulo: Subspace) -> List[Vector]:
    position = {old: new for new, old in enumerate(modulo.complement_indices())}
    result = []
    for vec in vectors:
        residue = modulo.reduce(vec)
        if residue:
            result.append({position[i]: value for i, value in residue.items()})
    return result


def composition_series(action: ModuleAction) -> CompositionSeries:
    """
    Build a composition series bottom-up.

    At each step a minimal submodule of M/F_i is lifted to F_{i+1}.
    """
    series = CompositionSeries(action, [Subspace.zero(action.dim)])
    current = series.filtration[0]
    while current.dim < action.dim:
        quotient = action.quotient(current, check=False)
        kept = current.complement_indices()
        sub, top, certified = minimal_submodule(quotient)
        lifted = [{kept[i]: value for i, value in row.items()} for row in sub.basis]
        current = Subspace.from_vectors(action.dim, list(current.basis) + lifted)
        series.filtration.append(current)
        series.factors.append(Factor(top.weight, sub.dim, top.parity, certified))
        logger.debug(f"{action.name}: factor {top.weight} of dim {sub.dim}")
    return series


def splitness_flags(series: CompositionSeries) -> List[SplitnessModel]:
    """
    Adjacent flags ask whether F_i/F_{i−2} ⊃ F_{i−1}/F_{i−2} splits; filtration
    flags ask whether F_{i−1} ⊂ F_i splits.
    """
    action = series.action
    filtration = series.filtration
    flags = []
    for i in range(2, len(filtration)):
        bottom = filtration[i - 2]
        quotient = action.quotient(bottom, check=False)
        sub = Subspace.from_vectors(quotient.dim, _to_quotient(list(filtration[i - 1].basis), bottom))
        ambient = Subspace.from_vectors(quotient.dim, _to_quotient(list(filtration[i].basis), bottom))
        flags.append(
            SplitnessModel(
                kind="adjacent",
                factors=[i - 2, i - 1],
                split=detect_splitting(quotient, sub, ambient),
            )
        )
    for i in range(2, len(filtration)):
        flags.append(
            SplitnessModel(
                kind="filtration",
                factors=list(range(i)),
                split=detect_splitting(action, filtration[i - 1], filtration[i]),
            )
        )
    return flags


def _highest_model(
    action: ModuleAction, hv: HighestVector, frame: WeightFrame
) -> HighestVectorModel:
    coords = {action.module.label(i): format_scalar(v) for i, v in sorted(hv.vector.items())}
    return HighestVectorModel(
        weight=WeightModel.from_weight(frame.apply(hv.weight)),
        parity=parity_label(hv.parity),
        coords=coords,
    )


def composition_report(
    action: ModuleAction,
    analyze_splitting: bool = True,
    frame: Optional[WeightFrame] = None,
) -> ModuleReport:
    """
    Weights, highest vectors, composition factors and splitness of a module.

    Args:
        action: The module (for cohomology, the action induced on H)
        analyze_splitting: Whether to solve for equivariant projections
        frame: How the case writes its weights; torus coordinates by default

    Returns:
        ModuleReport whose factor dimensions add up to the module dimension

    Raises:
        InvariantViolationError: if the basis label weights disagree with the
            torus eigenvalues
    """
    frame = frame or WeightFrame()
    label_eigenvalues(action)
    multiplicities: Dict[Weight, int] = {}
    for weight, count in action.module.weight_multiplicities().items():
        shown = frame.apply(weight)
        multiplicities[shown] = multiplicities.get(shown, 0) + count
    report = ModuleReport(
        dim=action.dim,
        weight_multiplicities=[
            WeightCount(weight=WeightModel.from_weight(w), count=c)
            for w, c in sorted(multiplicities.items(), reverse=True)
        ],
        raising=[action.algebra.space.label(i) for i in action.algebra.raising],
        weight_frame=frame.describe(),
    )
    if action.dim == 0:
        return report

    report.highest = [_highest_model(action, hv, frame) for hv in highest_vectors(action)]
    series = composition_series(action)
    report.factors = [
        FactorModel(
            weight=WeightModel.from_weight(frame.apply(f.weight)),
            dim=f.dim,
            parity=parity_label(f.parity),
            certified=f.certified,
        )
        for f in series.factors
    ]
    for index, factor in enumerate(series.factors):
        if not factor.certified:
            report.notes.append(
                f"factor {index} ({frame.apply(factor.weight)}) has a highest-vector block "
                "of dim > 1; irreducibility not certified"
            )
    if analyze_splitting:
        report.splitness = splitness_flags(series)
    logger.info(
        f"Module {action.name}: dim {action.dim}, "
        f"factors {[str(frame.apply(f.weight)) for f in series.factors]}"
    )
    return report
