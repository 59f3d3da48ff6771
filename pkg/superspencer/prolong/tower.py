"""Cartan prolongation of a depth-one pair.

g_k (k ≥ 1) is stored as a subspace of g_{k−1} ⊗ g_{-1}*, the coordinate of
b_a ⊗ ṽ_i sitting at a·n + i where n = dim g_{-1}. An element X acts on g_{-1}
by [X, v_i] = Σ_a x_{a·n+i} b_a, so the basis of g_k is the echelon basis of the
stored subspace and brackets land directly in basis coordinates of g_{k−1}.
"""
import logging
from typing import Dict, List, Mapping, Optional, Tuple

from superspencer.config import settings
from superspencer.exactlin import (
    ONE,
    Scalar,
    SparseMatrix,
    Subspace,
    Vector,
    add_scaled,
    block_kernel,
    koszul_sign,
)
from superspencer.exceptions import (
    ContainmentError,
    InvalidParameterError,
    NotInStoredSubspaceError,
    TruncatedTowerError,
)
from superspencer.grading.pair import GradedPair
from superspencer.superalg import ModuleAction, SuperSpace, adjoint_action
from superspencer.superalg.space import dual_space, tensor_space

logger = logging.getLogger(__name__)


class ProlongationTower:
    """The terms g_{-1}, g_0, g_1, … of a prolongation, computed up to a limit."""

    def __init__(self, pair: GradedPair):
        self.pair = pair
        self.n = pair.dim_minus1
        self.terms: Dict[int, Subspace] = {}
        self.stabilized = False
        self._spaces: Dict[int, SuperSpace] = {
            -1: pair.gminus1.module,
            0: pair.g0.space,
        }
        self.dual_space = dual_space(pair.gminus1.module)
        self._dual_action: Optional[ModuleAction] = None
        self._actions: Dict[int, ModuleAction] = {}
        self._brackets: Dict[Tuple[int, int], SparseMatrix] = {}

    @property
    def label(self) -> str:
        return self.pair.label

    @property
    def top(self) -> int:
        """Largest k whose term has been computed (0 before any step)."""
        return max(self.terms, default=0)

    @property
    def truncated(self) -> bool:
        return not self.stabilized

    def has(self, k: int) -> bool:
        return k <= self.top or self.stabilized

    def dim(self, k: int) -> int:
        """
        Dimension of g_k.

        Raises:
            TruncatedTowerError: if k lies beyond the computed part of an
                unstabilized tower
        """
        if k < -1:
            return 0
        if k == -1:
            return self.n
        if k == 0:
            return self.pair.g0.dim
        if k in self.terms:
            return self.terms[k].dim
        if self.stabilized:
            return 0
        raise TruncatedTowerError(
            f"Tower {self.label} was cut at k={self.top} before g_{k} was reached"
        )

    def dims(self) -> Dict[int, int]:
        return {k: self.dim(k) for k in range(-1, self.top + 1)}

    def space(self, k: int) -> SuperSpace:
        """Homogeneous basis of g_k; a g_k basis vector carries the label of its pivot."""
        if k not in self._spaces:
            if self.dim(k) == 0:
                return SuperSpace([], self.pair.gminus1.module.ranks)
            ambient = tensor_space(self.space(k - 1), self.dual_space)
            self._spaces[k] = ambient.subset(self.terms[k].pivots)
        return self._spaces[k]

    def ambient_dim(self, k: int) -> int:
        """Dimension of g_{k−1} ⊗ g_{-1}*, the space g_k is stored in."""
        return self.dim(k - 1) * self.n

    def append(self, term: Subspace) -> None:
        k = self.top + 1
        if term.ambient_dim != self.ambient_dim(k):
            raise InvalidParameterError(
                f"Term for g_{k} lives in dim {term.ambient_dim}, expected {self.ambient_dim(k)}"
            )
        self.terms[k] = term
        if term.dim == 0:
            self.stabilized = True

    # --- brackets with g_{-1} ----------------------------------------------

    def bracket_matrix(self, t: int, i: int) -> SparseMatrix:
        """Matrix of X ↦ [X, v_i] from g_t to g_{t−1}, in basis coordinates."""
        key = (t, i)
        if key not in self._brackets:
            rows, cols = self.dim(t - 1), self.dim(t)
            columns: Dict[int, Vector] = {}
            if t == 0:
                for r, m in enumerate(self.pair.gminus1.matrices):
                    column = m.column(i)
                    if column:
                        columns[r] = column
            elif t >= 1:
                n = self.n
                for r, row in enumerate(self.terms[t].basis):
                    column = {index // n: value for index, value in row.items() if index % n == i}
                    if column:
                        columns[r] = column
            self._brackets[key] = SparseMatrix.from_columns(rows, cols, columns)
        return self._brackets[key]

    def element(self, k: int, coords: Mapping[int, Scalar]) -> Vector:
        """Ambient vector of the g_k element with the given basis coordinates."""
        if k <= 0:
            return dict(coords)
        return self.terms[k].vector(coords)

    def coordinates(self, k: int, vec: Mapping[int, Scalar]) -> Vector:
        """
        Basis coordinates of an ambient vector of g_k.

        Raises:
            NotInStoredSubspaceError: if the vector is not in the stored g_k
        """
        if k <= 0:
            return dict(vec)
        try:
            return self.terms[k].coordinates(vec)
        except ContainmentError:
            raise NotInStoredSubspaceError(
                f"Vector is not an element of g_{k} of {self.label}"
            ) from None

    # --- module structure --------------------------------------------------

    def dual_action(self) -> ModuleAction:
        if self._dual_action is None:
            self._dual_action = self.pair.gminus1.dual()
        return self._dual_action

    def action(self, t: int) -> ModuleAction:
        """g_0-module structure of g_t, in the basis of ``space(t)``."""
        if t not in self._actions:
            if t == -1:
                action = self.pair.gminus1
            elif t == 0:
                action = adjoint_action(self.pair.g0)
            elif self.dim(t) == 0:
                action = ModuleAction(
                    self.pair.g0,
                    self.space(t),
                    [SparseMatrix.zero(0, 0)] * self.pair.g0.dim,
                    f"g_{t}",
                )
            else:
                action = self.action(t - 1).tensor(self.dual_action()).restrict(self.terms[t])
            self._actions[t] = action
        return self._actions[t]

    # --- full-tensor view --------------------------------------------------

    def flatten(self, k: int) -> List[Vector]:
        """
        Basis of g_k inside g_0 ⊗ (g_{-1}*)^{⊗k}.

        The coordinate of b_α ⊗ ṽ_{i_1} ⊗ … ⊗ ṽ_{i_k} is α·n^k + i_1·n^{k−1} + … + i_k;
        the last slot is the one a bracket with g_{-1} evaluates first.
        """
        if k == 0:
            return [{a: ONE} for a in range(self.dim(0))]
        if k < 0 or self.dim(k) == 0:
            return []
        previous = self.flatten(k - 1)
        n = self.n
        result = []
        for row in self.terms[k].basis:
            vec: Vector = {}
            for index, value in row.items():
                a, i = divmod(index, n)
                add_scaled(vec, value, {c * n + i: coef for c, coef in previous[a].items()})
            result.append(vec)
        return result

    def check_symmetry(self, k: int) -> bool:
        """True when every flattened g_k vector is super-symmetric in adjacent dual slots."""
        n = self.n
        parities = self.pair.gminus1.module.parities()
        for vec in self.flatten(k):
            for index, value in vec.items():
                digits = []
                rest = index
                for _ in range(k):
                    rest, digit = divmod(rest, n)
                    digits.append(digit)
                digits.reverse()
                for slot in range(k - 1):
                    swapped = list(digits)
                    swapped[slot], swapped[slot + 1] = digits[slot + 1], digits[slot]
                    target = rest
                    for digit in swapped:
                        target = target * n + digit
                    sign = koszul_sign(parities[digits[slot]], parities[digits[slot + 1]])
                    if vec.get(target, 0) != sign * value:
                        return False
        return True

    def __repr__(self) -> str:
        dims = ", ".join(str(d) for d in self.dims().values())
        state = "stabilized" if self.stabilized else "truncated"
        return f"ProlongationTower({self.label}: {dims}; {state})"


def prolong_step(tower: ProlongationTower) -> Subspace:
    """
    Compute the next term g_k from g_{k−1}.

    g_k = {X ∈ g_{k−1} ⊗ g_{-1}* : [[X, v_i], v_j] = (−1)^{p_i p_j} [[X, v_j], v_i]}.
    For i = j odd the condition reads [[X, v_i], v_i] = 0. The equations are
    homogeneous for parity and weight, so the kernel is solved block by block.

    Returns:
        The new term as a subspace of g_{k−1} ⊗ g_{-1}* (not yet appended)
    """
    k = tower.top + 1
    n = tower.n
    lower = k - 1
    parities = tower.pair.gminus1.module.parities()
    ambient = tensor_space(tower.space(lower), tower.dual_space)
    if ambient.dim == 0:
        return Subspace.zero(0)

    # [b_a, v_j] for every basis vector b_a of g_{k−1}
    brackets = [tower.bracket_matrix(lower, j) for j in range(n)]
    columns: Dict[int, Vector] = {}
    for a in range(tower.dim(lower)):
        for i in range(n):
            column: Vector = {}
            for j in range(n):
                image = brackets[j].column(a)
                if not image:
                    continue
                if j > i:
                    coef = 1
                elif j < i:
                    coef = -koszul_sign(parities[i], parities[j])
                elif parities[i]:
                    coef = 1
                else:
                    continue
                low, high = min(i, j), max(i, j)
                for c, value in image.items():
                    add_scaled(column, coef * value, {c * n * n + low * n + high: 1})
            if column:
                columns[a * n + i] = column

    blocks = []
    for sources in ambient.blocks().values():
        blocks.append(block_kernel(columns, sources))
    term = Subspace.from_blocks(ambient.dim, blocks)
    logger.info(f"Prolongation {tower.label}: g_{k} has dim {term.dim}")
    return term


def cartan_prolong(pair: GradedPair, kmax: Optional[int] = None) -> ProlongationTower:
    """
    Iterate prolong_step until a zero term or kmax.

    Args:
        pair: Depth-one pair; faithfulness is not required
        kmax: Last order to compute; defaults to settings.kmax, then 2 + dim g_{-1}

    Returns:
        The tower, ``stabilized`` when a zero term was reached
    """
    limit = kmax if kmax is not None else settings.kmax
    if limit is None:
        limit = 2 + pair.dim_minus1
    if limit < 1:
        raise InvalidParameterError(f"kmax must be at least 1, got {limit}")
    tower = ProlongationTower(pair)
    while tower.top < limit and not tower.stabilized:
        tower.append(prolong_step(tower))
    if tower.truncated:
        logger.warning(f"Prolongation {pair.label} truncated at k={limit} without stabilizing")
    return tower


def tower_bracket(
    tower: ProlongationTower, i: int, x: Mapping[int, Scalar], v: Mapping[int, Scalar]
) -> Vector:
    """
    [x, v] for x in g_i and v in g_{-1}.

    Args:
        tower: The tower
        i: Degree of x, i ≥ 0
        x: Ambient coordinates of x (basis coordinates of g_0 when i = 0)
        v: Coordinates of v in g_{-1}

    Returns:
        Basis coordinates of the bracket in g_{i−1}

    Raises:
        NotInStoredSubspaceError: if x is not in the stored g_i
    """
    if i < 0:
        raise InvalidParameterError(f"Bracket degree must be nonnegative, got {i}")
    if i == 0:
        return tower.pair.gminus1.act_element(x, v)
    tower.coordinates(i, x)
    n = tower.n
    result: Vector = {}
    for index, value in x.items():
        a, j = divmod(index, n)
        coef = v.get(j)
        if coef:
            add_scaled(result, value * coef, {a: 1})
    return result
