"""Depth-one pairs (g_{-1}, g_0) and reference Z-gradings."""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from superspencer.exactlin import SparseMatrix, Subspace
from superspencer.exceptions import InvariantViolationError, MissingCentralGeneratorsError
from superspencer.superalg import LieSuperalgebra, ModuleAction, WeightFrame

logger = logging.getLogger(__name__)


@dataclass
class GradedPair:
    """g_0 together with its action on g_{-1}.

    ``radical`` lists the g_0 basis indices of the central generators that the
    reduced pair drops: None when no such split is recorded, () when g_0 is
    already reduced. ``frame`` fixes how report weights are written.
    """

    label: str
    g0: LieSuperalgebra
    gminus1: ModuleAction
    radical: Optional[Tuple[int, ...]] = None
    frame: WeightFrame = field(default_factory=WeightFrame)
    kernel: Subspace = field(init=False)
    faithful: bool = field(init=False)

    def __post_init__(self):
        if self.gminus1.algebra is not self.g0 and self.gminus1.algebra.dim != self.g0.dim:
            raise InvariantViolationError(f"Pair {self.label}: action is over another algebra")
        self.kernel = self.gminus1.kernel()
        self.faithful = self.kernel.dim == 0
        if not self.faithful:
            logger.info(f"Pair {self.label}: g0 acts with a kernel of dim {self.kernel.dim}")

    @property
    def dim_minus1(self) -> int:
        return self.gminus1.dim

    def superdims(self) -> Dict[str, Tuple[int, int]]:
        return {"g-1": self.gminus1.module.superdim, "g0": self.g0.superdim}


@dataclass
class ReferenceGrading:
    """A Z-graded algebra whose components serve as expected prolongation data."""

    label: str
    algebra: LieSuperalgebra
    radical: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.algebra.grading is None:
            raise InvariantViolationError(f"Reference {self.label} carries no grading")

    def component_dims(self) -> Dict[int, int]:
        return self.algebra.component_dims()

    def component_superdims(self) -> Dict[int, Tuple[int, int]]:
        result = {}
        for degree in self.component_dims():
            indices = self.algebra.component(degree)
            odd = sum(self.algebra.parity(i) for i in indices)
            result[degree] = (len(indices) - odd, odd)
        return result

    def pair(self) -> GradedPair:
        """The degree-zero subalgebra acting on the degree −1 component by brackets."""
        zero = self.algebra.component(0)
        minus = self.algebra.component(-1)
        g0 = self.algebra.subalgebra(zero, f"{self.algebra.name}_0")
        position = {old: new for new, old in enumerate(minus)}
        matrices = []
        for x in zero:
            columns = {}
            for j, y in enumerate(minus):
                bracket = self.algebra.bracket_basis(x, y)
                if bracket:
                    columns[j] = {position[k]: c for k, c in bracket.items()}
            matrices.append(SparseMatrix.from_columns(len(minus), len(minus), columns))
        module = ModuleAction(g0, self.algebra.space.subset(minus), matrices, f"{self.label} g-1")
        return GradedPair(f"{self.label}:pair", g0, module, self.radical)


def reduced_pair(pair: GradedPair) -> GradedPair:
    """
    Replace g_0 by the span of its basis without the recorded central generators.

    Raises:
        MissingCentralGeneratorsError: if the pair records no radical
        InvariantViolationError: if the remaining span is not a subalgebra
    """
    if pair.radical is None:
        raise MissingCentralGeneratorsError(
            f"Pair {pair.label} does not record central generators to drop"
        )
    if not pair.radical:
        return GradedPair(f"reduced:{pair.label}", pair.g0, pair.gminus1, (), pair.frame)
    dropped = set(pair.radical)
    kept = [i for i in range(pair.g0.dim) if i not in dropped]
    g0 = pair.g0.subalgebra(kept, f"reduced {pair.g0.name}")
    logger.info(f"Reduced {pair.label}: g0 dim {pair.g0.dim} -> {g0.dim}")
    return GradedPair(
        f"reduced:{pair.label}", g0, pair.gminus1.restrict_algebra(g0, kept), (), pair.frame
    )
