"""Spencer cochains C^{k,s} = g_{k−s} ⊗ E^s(g_{-1}*) and their differentials."""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from superspencer.exactlin import (
    SparseMatrix,
    Subspace,
    Vector,
    add_scaled,
    block_image,
    block_kernel,
    image_basis,
    kernel_basis,
    quotient_dim,
    rank,
)
from superspencer.exceptions import ContainmentError, InvalidParameterError
from superspencer.prolong import ProlongationTower
from superspencer.superalg import EXTERIOR, ModuleAction, SuperSpace, normalize_word, power_action
from superspencer.superalg.powers import PowerSpace
from superspencer.superalg.space import tensor_space

logger = logging.getLogger(__name__)

Differential = Callable[[ProlongationTower, int, int], SparseMatrix]


def _exterior(tower: ProlongationTower, s: int) -> PowerSpace:
    return PowerSpace(tower.dual_space, s, EXTERIOR)


def cochain_space(tower: ProlongationTower, k: int, s: int) -> SuperSpace:
    """
    Basis of C^{k,s}: the pair (b, I) sits at index b·dim E^s + I.

    A zero space is returned when k − s < −1 or g_{k−s} vanishes.
    """
    if s < 0:
        raise InvalidParameterError(f"Cochain degree must be nonnegative, got {s}")
    if k - s < -1:
        return SuperSpace([], tower.pair.gminus1.module.ranks)
    return tensor_space(tower.space(k - s), _exterior(tower, s))


def cochain_action(tower: ProlongationTower, k: int, s: int) -> ModuleAction:
    """g_0 acting on C^{k,s} by the tensor product of g_{k−s} and E^s(g_{-1}*)."""
    if k - s < -1:
        return ModuleAction(
            tower.pair.g0,
            cochain_space(tower, k, s),
            [SparseMatrix.zero(0, 0)] * tower.pair.g0.dim,
            f"C^{k},{s}",
        )
    exterior = power_action(tower.dual_action(), s, EXTERIOR)
    return tower.action(k - s).tensor(exterior)


def spencer_differential(tower: ProlongationTower, k: int, s: int) -> SparseMatrix:
    """
    Matrix of ∂: C^{k,s} → C^{k,s+1}.

    ∂(b ⊗ ω) = −Σ_i [b, v_i] ⊗ (ṽ_i ∧ ω), with ṽ_i ∧ ω brought to its monomial by
    the super-exterior sign rule. The map vanishes on C^{k,s} with k − s = −1.
    """
    source = cochain_space(tower, k, s)
    target = cochain_space(tower, k, s + 1)
    t = k - s
    if t <= -1 or source.dim == 0 or target.dim == 0:
        return SparseMatrix.zero(target.dim, source.dim)

    power = _exterior(tower, s)
    higher = _exterior(tower, s + 1)
    parities = tower.dual_space.parities()
    width, higher_width = power.dim, higher.dim
    n = tower.n
    brackets = [tower.bracket_matrix(t, i) for i in range(n)]

    # ṽ_i ∧ ω_I for every (i, I)
    wedge: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for index, word in enumerate(power.words):
        for i in range(n):
            normal = normalize_word((i,) + word, parities, EXTERIOR)
            if normal is not None:
                sign, monomial = normal
                wedge[(i, index)] = (sign, higher.word_index[monomial])

    columns: Dict[int, Vector] = {}
    for r in range(tower.dim(t)):
        for index in range(width):
            column: Vector = {}
            for i in range(n):
                product = wedge.get((i, index))
                if product is None:
                    continue
                image = brackets[i].column(r)
                if not image:
                    continue
                sign, target_word = product
                add_scaled(
                    column,
                    -sign,
                    {a * higher_width + target_word: value for a, value in image.items()},
                )
            if column:
                columns[r * width + index] = column
    matrix = SparseMatrix.from_columns(target.dim, source.dim, columns)
    logger.debug(f"∂^{k},{s} for {tower.label}: {matrix.rows}x{matrix.cols}, nnz {matrix.nnz}")
    return matrix


def blockwise_kernel(space: SuperSpace, matrix: SparseMatrix) -> Subspace:
    """Kernel of a parity- and weight-preserving map, solved per (parity, weight) block."""
    columns = matrix.columns()
    blocks = [block_kernel(columns, sources) for sources in space.blocks().values()]
    return Subspace.from_blocks(space.dim, blocks)


def blockwise_image(space: SuperSpace, matrix: SparseMatrix) -> Subspace:
    """Image of a parity- and weight-preserving map defined on ``space``."""
    columns = matrix.columns()
    blocks = [block_image(columns, sources) for sources in space.blocks().values()]
    return Subspace.from_blocks(matrix.rows, blocks)


@dataclass
class SpencerComplex:
    """C^{k,1} → C^{k,2} → C^{k,3} at one order k."""

    tower: ProlongationTower
    k: int
    spaces: List[SuperSpace] = field(init=False)
    d_in: SparseMatrix = field(init=False)
    d_out: SparseMatrix = field(init=False)
    _actions: Dict[int, ModuleAction] = field(init=False, default_factory=dict, repr=False)

    def __post_init__(self):
        self.spaces = [cochain_space(self.tower, self.k, s) for s in (1, 2, 3)]
        self.d_in = spencer_differential(self.tower, self.k, 1)
        self.d_out = spencer_differential(self.tower, self.k, 2)
        logger.info(
            f"Built Spencer complex of {self.tower.label} at k={self.k}: "
            f"dims {[space.dim for space in self.spaces]}"
        )

    def action(self, s: int) -> ModuleAction:
        if s not in self._actions:
            self._actions[s] = cochain_action(self.tower, self.k, s)
        return self._actions[s]

    def check_square_zero(self) -> bool:
        return (self.d_out @ self.d_in).is_zero()

    def check_equivariance(self) -> Optional[Tuple[int, int]]:
        """
        Check ρ(x)∘∂ = ∂∘ρ(x) on both differentials for every g_0 basis element.

        Returns:
            (g_0 index, s) of the first failure, or None
        """
        for s, matrix in ((1, self.d_in), (2, self.d_out)):
            source, target = self.action(s), self.action(s + 1)
            for x in range(self.tower.pair.g0.dim):
                if target.matrices[x] @ matrix != matrix @ source.matrices[x]:
                    return (x, s)
        return None

    def expected_image_dim(self) -> int:
        """dim(g_{k−1} ⊗ g_{-1}*) − dim g_k."""
        return self.tower.dim(self.k - 1) * self.tower.n - self.tower.dim(self.k)

    def check_rank_identity(self) -> bool:
        return rank(self.d_in) == self.expected_image_dim()


@dataclass
class CohomologySpace:
    """H^{k,s} = Ker ∂^{k,s} / Im ∂^{k,s−1} with its canonical transversal."""

    tower: ProlongationTower
    k: int
    s: int
    kernel: Subspace
    image: Subspace
    image_in_kernel: Subspace = field(init=False)
    transversal: Subspace = field(init=False)

    def __post_init__(self):
        self.image_in_kernel = Subspace.from_vectors(
            self.kernel.dim, [self.kernel.coordinates(row) for row in self.image.basis]
        )
        rows = [self.kernel.basis[i] for i in self.image_in_kernel.complement_indices()]
        self.transversal = Subspace.from_vectors(self.kernel.ambient_dim, rows)

    @property
    def dim(self) -> int:
        return self.kernel.dim - self.image.dim

    def module(self) -> ModuleAction:
        """g_0 acting on H, in the basis given by the transversal rows."""
        kernel_action = cochain_action(self.tower, self.k, self.s).restrict(self.kernel)
        return kernel_action.quotient(self.image_in_kernel)


def spencer_cohomology(
    tower: ProlongationTower,
    k: int,
    s: int = 2,
    differential: Optional[Differential] = None,
) -> CohomologySpace:
    """
    Compute H^{k,s} exactly.

    Args:
        tower: Tower holding g_{k−s−1} … g_{k−s+1}
        k: Order
        s: Cochain degree, 0 ≤ s ≤ 3
        differential: Replacement for spencer_differential (fault injection)

    Returns:
        The cohomology space with kernel, image and transversal
    """
    if not 0 <= s <= 3:
        raise InvalidParameterError(f"Cochain degree must lie in 0..3, got {s}")
    space = cochain_space(tower, k, s)
    if differential is None:
        kernel = blockwise_kernel(space, spencer_differential(tower, k, s))
        if s == 0:
            image = Subspace.zero(space.dim)
        else:
            lower = cochain_space(tower, k, s - 1)
            image = blockwise_image(lower, spencer_differential(tower, k, s - 1))
    else:
        kernel = kernel_basis(differential(tower, k, s))
        image = Subspace.zero(space.dim) if s == 0 else image_basis(differential(tower, k, s - 1))
    cohomology = CohomologySpace(tower, k, s, kernel, image)
    logger.info(f"H^{k},{s} of {tower.label} has dim {cohomology.dim}")
    return cohomology


def euler_check(
    tower: ProlongationTower, k: int, differential: Optional[Differential] = None
) -> bool:
    """
    Compare Σ_s (−1)^s dim C^{k,s} with Σ_s (−1)^s dim H^{k,s} along the row.

    The row runs over s = 0..k+1; C^{k,s} vanishes beyond. A differential whose
    image leaves the next kernel fails the check.
    """
    build = differential or spencer_differential
    last = k + 1
    images = [Subspace.zero(cochain_space(tower, k, 0).dim)]
    kernels = []
    for s in range(last + 1):
        matrix = build(tower, k, s)
        kernels.append(kernel_basis(matrix))
        images.append(image_basis(matrix))
    cochain_sum = 0
    cohomology_sum = 0
    for s in range(last + 1):
        sign = -1 if s % 2 else 1
        cochain_sum += sign * cochain_space(tower, k, s).dim
        try:
            cohomology_sum += sign * quotient_dim(images[s], kernels[s])
        except ContainmentError:
            logger.warning(f"Row k={k} of {tower.label}: image of ∂ at s={s - 1} leaves the kernel")
            return False
    passed = cochain_sum == cohomology_sum
    logger.info(f"Euler check of {tower.label} at k={k}: {'pass' if passed else 'fail'}")
    return passed
