"""Rank, kernels, images, intersections and linear solves over QQ."""
import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from superspencer.exactlin.elimination import rref_rows
from superspencer.exactlin.matrix import SparseMatrix
from superspencer.exactlin.scalars import ONE, Scalar, ScalarLike, to_scalar
from superspencer.exactlin.subspace import Subspace
from superspencer.exactlin.vectors import Vector
from superspencer.exceptions import ContainmentError, DimensionMismatchError

logger = logging.getLogger(__name__)

Echelon = Tuple[List[Vector], List[int]]


def rank(m: SparseMatrix) -> int:
    """Exact rank over the rationals."""
    _, pivots = rref_rows([row for _, row in m.row_items()])
    return len(pivots)


def _null_vectors(echelon: Sequence[Vector], pivots: Sequence[int], free: Sequence[int]) -> List[Vector]:
    """Null-space generators of an echelon system, one per free column."""
    vectors = []
    for f in free:
        vec: Vector = {f: ONE}
        for row, pivot in zip(echelon, pivots):
            value = row.get(f)
            if value:
                vec[pivot] = -value
        vectors.append(vec)
    return vectors


def kernel_basis(m: SparseMatrix) -> Subspace:
    """Kernel of m as a subspace of Q^cols."""
    echelon, pivots = rref_rows([row for _, row in m.row_items()])
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    return Subspace.from_vectors(m.cols, _null_vectors(echelon, pivots, free))


def image_basis(m: SparseMatrix) -> Subspace:
    """Column space of m as a subspace of Q^rows."""
    return Subspace.from_vectors(m.rows, m.columns().values())


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection of two subspaces of the same ambient space."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(
            f"Cannot intersect subspaces of ambient dims {a.ambient_dim} and {b.ambient_dim}"
        )
    forms = list(a.annihilator().basis) + list(b.annihilator().basis)
    system = SparseMatrix(len(forms), a.ambient_dim, dict(enumerate(forms)))
    return kernel_basis(system)


def quotient_dim(sub: Subspace, ambient: Subspace) -> int:
    """dim ambient − dim sub, after checking sub ⊆ ambient."""
    if not sub.is_subspace_of(ambient):
        raise ContainmentError("Quotient requested for a subspace that is not contained")
    return ambient.dim - sub.dim


def solve(m: SparseMatrix, rhs: Sequence[ScalarLike]) -> Optional[List[Scalar]]:
    """
    Find a particular solution of m·x = rhs.

    Args:
        m: Coefficient matrix
        rhs: Right-hand side of length m.rows

    Returns:
        A solution vector of length m.cols, or None when the system is inconsistent
    """
    if len(rhs) != m.rows:
        raise DimensionMismatchError(f"rhs has length {len(rhs)}, expected {m.rows}")
    solution = solve_sparse(m, {i: to_scalar(v) for i, v in enumerate(rhs) if to_scalar(v)})
    if solution is None:
        return None
    return [solution.get(c, to_scalar(0)) for c in range(m.cols)]


def solve_sparse(m: SparseMatrix, rhs: Mapping[int, Scalar]) -> Optional[Vector]:
    """Sparse variant of :func:`solve`; rhs and the result are index -> value maps."""
    augmented_column = m.cols
    rows = []
    for r in range(m.rows):
        row = dict(m.row(r))
        value = rhs.get(r)
        if value:
            row[augmented_column] = value
        rows.append(row)
    echelon, pivots = rref_rows(rows)
    if pivots and pivots[-1] == augmented_column:
        return None
    solution: Vector = {}
    for row, pivot in zip(echelon, pivots):
        value = row.get(augmented_column)
        if value:
            solution[pivot] = value
    return solution


def block_kernel(columns: Mapping[int, Mapping[int, Scalar]], sources: Sequence[int]) -> Echelon:
    """
    Kernel of a linear map restricted to a block of source coordinates.

    Args:
        columns: source index -> image vector (target index -> value)
        sources: Source coordinates spanning the block

    Returns:
        Echelon basis (rows, pivots) of the kernel, in source coordinates
    """
    equations: Dict[int, Vector] = {}
    for s in sources:
        for t, value in columns.get(s, {}).items():
            equations.setdefault(t, {})[s] = value
    echelon, pivots = rref_rows(list(equations.values()))
    pivot_set = set(pivots)
    free = [s for s in sources if s not in pivot_set]
    return rref_rows(_null_vectors(echelon, pivots, free))


def block_image(columns: Mapping[int, Mapping[int, Scalar]], sources: Sequence[int]) -> Echelon:
    """Echelon basis of the span of the images of a block of sources."""
    return rref_rows([dict(columns[s]) for s in sources if columns.get(s)])
