"""Representations of Lie superalgebras on super spaces."""
import logging
from typing import Dict, Mapping, Optional, Sequence, Tuple

from superspencer.exactlin import (
    Scalar,
    SparseMatrix,
    Subspace,
    Vector,
    add_scaled,
    kernel_basis,
    koszul_sign,
    to_scalar,
)
from superspencer.exceptions import (
    ContainmentError,
    DimensionMismatchError,
    InvariantViolationError,
    NotInvariantError,
)
from superspencer.superalg.algebra import IdentityViolation, LieSuperalgebra
from superspencer.superalg.space import BasisVector, SuperSpace, dual_space, tensor_space

logger = logging.getLogger(__name__)


class ModuleAction:
    """Action matrices ρ(x_i) of every algebra basis element on a module."""

    def __init__(
        self,
        algebra: LieSuperalgebra,
        module: SuperSpace,
        matrices: Sequence[SparseMatrix],
        name: Optional[str] = None,
    ):
        if len(matrices) != algebra.dim:
            raise DimensionMismatchError(
                f"{len(matrices)} action matrices given for an algebra of dim {algebra.dim}"
            )
        for m in matrices:
            if m.shape != (module.dim, module.dim):
                raise DimensionMismatchError(
                    f"Action matrix of shape {m.shape} on a module of dim {module.dim}"
                )
        self.algebra = algebra
        self.module = module
        self.matrices: Tuple[SparseMatrix, ...] = tuple(matrices)
        self.name = name or f"{algebra.name}-module"

    @property
    def dim(self) -> int:
        return self.module.dim

    def act(self, i: int, vec: Mapping[int, Scalar]) -> Vector:
        return self.matrices[i].apply(vec)

    def act_element(self, x: Mapping[int, Scalar], vec: Mapping[int, Scalar]) -> Vector:
        result: Vector = {}
        for i, coef in x.items():
            add_scaled(result, coef, self.matrices[i].apply(vec))
        return result

    def matrix_of(self, x: Mapping[int, Scalar]) -> SparseMatrix:
        """ρ of an algebra element given in basis coordinates."""
        total = SparseMatrix.zero(self.dim, self.dim)
        for i, coef in x.items():
            total = total.combine(self.matrices[i], coef)
        return total

    def kernel(self) -> Subspace:
        """Algebra elements acting as zero, as a subspace of algebra coordinates."""
        n = self.dim
        columns = {
            i: {r * n + c: value for r, c, value in m.triplets()}
            for i, m in enumerate(self.matrices)
        }
        return kernel_basis(SparseMatrix.from_columns(n * n, self.algebra.dim, columns))

    def is_faithful(self) -> bool:
        return self.kernel().dim == 0

    def check_representation(self) -> Optional[IdentityViolation]:
        """
        Check parity, weights and ρ([x,y]) = ρ(x)ρ(y) − (−1)^{p(x)p(y)} ρ(y)ρ(x).

        Returns:
            The first violation found, or None
        """
        alg = self.algebra
        for i, m in enumerate(self.matrices):
            for r, c, _ in m.triplets():
                if self.module.parity(r) != (self.module.parity(c) + alg.parity(i)) & 1:
                    return IdentityViolation("parity", (i, r, c), f"ρ({i}) does not have parity {alg.parity(i)}")
                if self.module.weight(r) != self.module.weight(c) + alg.weight(i):
                    return IdentityViolation("weight", (i, r, c), f"ρ({i}) shifts weights wrongly at ({r},{c})")
        for i in range(alg.dim):
            for j in range(i, alg.dim):
                sign = koszul_sign(alg.parity(i), alg.parity(j))
                lhs = self.matrix_of(alg.bracket_basis(i, j))
                rhs = (self.matrices[i] @ self.matrices[j]).combine(
                    self.matrices[j] @ self.matrices[i], -sign
                )
                if lhs != rhs:
                    return IdentityViolation(
                        "representation", (i, j), f"ρ([x_{i}, x_{j}]) differs from the supercommutator"
                    )
        return None

    def dual(self) -> "ModuleAction":
        """Contragredient action: (x·φ)(u) = −(−1)^{p(x)p(φ)} φ(x·u)."""
        parities = self.module.parities()
        matrices = []
        for i, m in enumerate(self.matrices):
            px = self.algebra.parity(i)
            entries: Dict[int, Dict[int, Scalar]] = {}
            for r, c, value in m.triplets():
                entries.setdefault(c, {})[r] = -koszul_sign(px, parities[r]) * value
            matrices.append(SparseMatrix(self.dim, self.dim, entries))
        return ModuleAction(self.algebra, dual_space(self.module), matrices, f"{self.name}*")

    def tensor(self, other: "ModuleAction") -> "ModuleAction":
        """x·(u⊗v) = (x·u)⊗v + (−1)^{p(x)p(u)} u⊗(x·v) on the tensor product."""
        if other.algebra.dim != self.algebra.dim:
            raise DimensionMismatchError("Tensor product of modules over different algebras")
        space = tensor_space(self.module, other.module)
        nb = other.dim
        matrices = []
        for i in range(self.algebra.dim):
            px = self.algebra.parity(i)
            left = self.matrices[i]
            right = other.matrices[i]
            entries: Dict[int, Dict[int, Scalar]] = {}
            for r, c, value in left.triplets():
                for j in range(nb):
                    entries.setdefault(r * nb + j, {})[c * nb + j] = value
            for r, c, value in right.triplets():
                for u in range(self.dim):
                    sign = koszul_sign(px, self.module.parity(u))
                    row = entries.setdefault(u * nb + r, {})
                    col = u * nb + c
                    updated = row.get(col, 0) + sign * value
                    if updated:
                        row[col] = updated
                    else:
                        row.pop(col, None)
            matrices.append(SparseMatrix(space.dim, space.dim, entries))
        return ModuleAction(self.algebra, space, matrices, f"{self.name}⊗{other.name}")

    def subspace_space(self, sub: Subspace) -> SuperSpace:
        """Super space whose basis is the echelon basis of sub, labeled by pivots.

        Raises:
            InvariantViolationError: if a basis row mixes parities or weights
        """
        basis = []
        for row, pivot in zip(sub.basis, sub.pivots):
            parity = self.module.parity(pivot)
            weight = self.module.weight(pivot)
            for index in row:
                if self.module.parity(index) != parity or self.module.weight(index) != weight:
                    raise InvariantViolationError(
                        f"Subspace row at pivot {pivot} is not homogeneous"
                    )
            basis.append(BasisVector(self.module.label(pivot), parity, weight))
        return SuperSpace(basis, self.module.ranks)

    def is_invariant(self, sub: Subspace) -> bool:
        return all(sub.contains(m.apply(row)) for m in self.matrices for row in sub.basis)

    def restrict(self, sub: Subspace) -> "ModuleAction":
        """Action on an invariant subspace, in the coordinates of its echelon basis."""
        space = self.subspace_space(sub)
        matrices = []
        for m in self.matrices:
            columns = {}
            for index, row in enumerate(sub.basis):
                try:
                    columns[index] = sub.coordinates(m.apply(row))
                except ContainmentError:
                    raise NotInvariantError(
                        f"Subspace of {self.name} is not invariant"
                    ) from None
            matrices.append(SparseMatrix.from_columns(sub.dim, sub.dim, columns))
        return ModuleAction(self.algebra, space, matrices, f"{self.name}|sub")

    def quotient(self, sub: Subspace, check: bool = True) -> "ModuleAction":
        """Action on module/sub, with basis the unit vectors at non-pivot coordinates of sub."""
        if check and not self.is_invariant(sub):
            raise NotInvariantError(f"Cannot form quotient of {self.name} by a non-invariant subspace")
        kept = sub.complement_indices()
        position = {old: new for new, old in enumerate(kept)}
        matrices = []
        for m in self.matrices:
            columns = {}
            for new, old in enumerate(kept):
                residue = sub.reduce(m.column(old))
                if residue:
                    columns[new] = {position[c]: v for c, v in residue.items()}
            matrices.append(SparseMatrix.from_columns(len(kept), len(kept), columns))
        return ModuleAction(self.algebra, self.module.subset(kept), matrices, f"{self.name}/sub")

    def restrict_algebra(self, subalgebra: LieSuperalgebra, indices: Sequence[int]) -> "ModuleAction":
        """The same module viewed over the subalgebra spanned by the given basis elements."""
        return ModuleAction(
            subalgebra, self.module, [self.matrices[i] for i in indices], self.name
        )

    def __repr__(self) -> str:
        return f"ModuleAction({self.name}, dim={self.dim})"


def adjoint_action(alg: LieSuperalgebra) -> ModuleAction:
    return ModuleAction(alg, alg.space, [alg.adjoint(i) for i in range(alg.dim)], f"ad {alg.name}")


def trivial_action(alg: LieSuperalgebra, module: SuperSpace) -> ModuleAction:
    zero = SparseMatrix.zero(module.dim, module.dim)
    return ModuleAction(alg, module, [zero] * alg.dim, f"trivial {alg.name}-module")


def check_invariant_form(
    action: ModuleAction, form: Mapping[Tuple[int, int], Scalar]
) -> Optional[IdentityViolation]:
    """
    Check B(x·u, v) + (−1)^{p(x)p(u)} B(u, x·v) = 0 on all basis triples.

    Args:
        action: Module action to test
        form: Nonzero Gram entries B(u_a, u_b) keyed by (a, b)

    Returns:
        The first failing (x, a, b), or None
    """
    gram: Dict[int, Dict[int, Scalar]] = {}
    for (a, b), value in form.items():
        gram.setdefault(a, {})[b] = to_scalar(value)
    n = action.dim
    for i, m in enumerate(action.matrices):
        px = action.algebra.parity(i)
        for a in range(n):
            xa = m.column(a)
            sign = koszul_sign(px, action.module.parity(a))
            for b in range(n):
                total = 0
                for r, value in xa.items():
                    total += value * gram.get(r, {}).get(b, 0)
                for r, value in m.column(b).items():
                    total += sign * value * gram.get(a, {}).get(r, 0)
                if total:
                    return IdentityViolation("form", (i, a, b), f"Form is not invariant under x_{i} on ({a},{b})")
    return None