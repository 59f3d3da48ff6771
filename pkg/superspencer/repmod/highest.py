"""Highest vectors and generated submodules."""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Mapping, Optional, Sequence

from superspencer.exactlin import IncrementalEchelon, Scalar, Subspace, Vector, block_kernel
from superspencer.superalg import ModuleAction, Weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HighestVector:
    vector: Vector
    weight: Weight
    parity: int


def highest_vectors(
    action: ModuleAction,
    raising: Optional[Sequence[int]] = None,
    modulo: Optional[Subspace] = None,
) -> List[HighestVector]:
    """
    Basis of the joint kernel of the raising operators, block by block.

    Args:
        action: Module to search
        raising: g_0 basis indices of the raising operators; defaults to the
            algebra's raising set
        modulo: Optional invariant subspace; the kernel is taken in
            module/modulo and only vectors independent of modulo are returned

    Returns:
        Highest vectors ordered by block of first appearance, each homogeneous
    """
    raising = action.algebra.raising if raising is None else raising
    n = action.dim
    columns = {}
    for s in range(n):
        column: Vector = {}
        for position, x in enumerate(raising):
            image = action.matrices[x].column(s)
            if modulo is not None and image:
                image = modulo.reduce(image)
            for t, value in image.items():
                column[position * n + t] = value
        if column:
            columns[s] = column

    echelon = None
    if modulo is not None:
        echelon = IncrementalEchelon(n)
        echelon.extend(modulo.basis)
    result = []
    for (parity, weight), sources in action.module.blocks().items():
        rows, _ = block_kernel(columns, sources)
        if echelon is not None:
            rows = [row for row in rows if echelon.add(row) is not None]
        result.extend(HighestVector(row, weight, parity) for row in rows)
    logger.debug(f"{action.name}: {len(result)} highest vectors")
    return result


def generate_submodule(
    action: ModuleAction, seeds: Iterable[Mapping[int, Scalar]]
) -> Subspace:
    """Smallest invariant subspace containing the seeds, by closure under the action."""
    echelon = IncrementalEchelon(action.dim)
    queue = [dict(seed) for seed in seeds if seed]
    while queue:
        vec = queue.pop()
        row = echelon.add(vec)
        if row is None:
            continue
        for m in action.matrices:
            image = m.apply(row)
            if image and not echelon.contains(image):
                queue.append(image)
    return echelon.to_subspace()
