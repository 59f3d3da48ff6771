"""Deciding whether an invariant subspace has an invariant complement."""
import logging
from typing import Dict, Optional, Tuple

from superspencer.exactlin import SparseMatrix, Subspace, Vector, add_scaled, solve_sparse
from superspencer.exceptions import NotInvariantError
from superspencer.superalg import ModuleAction

logger = logging.getLogger(__name__)


def detect_splitting(
    action: ModuleAction, sub: Subspace, ambient: Optional[Subspace] = None
) -> bool:
    """
    Decide whether sub ⊂ ambient admits an invariant complement.

    Solves for an even, weight-preserving equivariant projection π onto sub with
    π|sub = id. With echelon rows s_l of sub and unit vectors e_j at its
    non-pivot coordinates, π(e_j) = Σ_l y_{l,j} s_l and equivariance reads

        (x e_j)[piv_m] + Σ_{j'} r_{j'} y_{m,j'} − Σ_l ρ_sub(x)[m][l] y_{l,j} = 0,

    where r is x e_j reduced modulo sub.

    Args:
        action: Module action
        sub: Invariant subspace (module coordinates)
        ambient: Optional invariant subspace containing sub; defaults to the module

    Returns:
        True when a complement exists

    Raises:
        NotInvariantError: if sub or ambient is not invariant
    """
    if ambient is not None:
        outer = action.restrict(ambient)
        sub = Subspace.from_vectors(ambient.dim, [ambient.coordinates(row) for row in sub.basis])
        return detect_splitting(outer, sub)
    if sub.dim in (0, action.dim):
        return True

    inner = action.restrict(sub)
    complement = sub.complement_indices()
    module = action.module
    sub_keys = [(module.parity(p), module.weight(p)) for p in sub.pivots]

    unknowns: Dict[Tuple[int, int], int] = {}
    for l, key in enumerate(sub_keys):
        for j in complement:
            if (module.parity(j), module.weight(j)) == key:
                unknowns[(l, j)] = len(unknowns)
    complement_position = {j: index for index, j in enumerate(complement)}

    rows: Dict[int, Vector] = {}
    rhs: Vector = {}
    dim_sub = sub.dim
    for x, matrix in enumerate(action.matrices):
        for j in complement:
            image = matrix.column(j)
            residue = sub.reduce(image) if image else {}
            for m in range(dim_sub):
                equation = (x * len(complement) + complement_position[j]) * dim_sub + m
                row: Vector = {}
                for j2, value in residue.items():
                    variable = unknowns.get((m, j2))
                    if variable is not None:
                        add_scaled(row, value, {variable: 1})
                for l, value in inner.matrices[x].row(m).items():
                    variable = unknowns.get((l, j))
                    if variable is not None:
                        add_scaled(row, -value, {variable: 1})
                constant = image.get(sub.pivots[m]) if image else None
                if row:
                    rows[equation] = row
                if constant:
                    rhs[equation] = -constant
    system_rows = max(rows.keys() | rhs.keys(), default=-1) + 1
    system = SparseMatrix(system_rows, len(unknowns), rows)
    solution = solve_sparse(system, rhs)
    split = solution is not None
    logger.debug(
        f"Splitting of a {dim_sub}-dim submodule of {action.name}: "
        f"{len(unknowns)} unknowns, {'split' if split else 'nonsplit'}"
    )
    return split
