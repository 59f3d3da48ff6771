"""Torus weight decomposition and the gl(n) dimension formula."""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Poly, symbols
from sympy.polys.domains import QQ

from superspencer.exactlin import SparseMatrix, Subspace, intersect, kernel_basis, to_fraction
from superspencer.exceptions import (
    InvalidParameterError,
    InvariantViolationError,
    NonDominantWeightError,
    NonSemisimpleActionError,
)
from superspencer.superalg import ModuleAction, Weight

logger = logging.getLogger(__name__)

_x = symbols("x")

Eigenvalues = Tuple[Fraction, ...]


def _is_diagonal(m: SparseMatrix) -> bool:
    return all(r == c for r, c, _ in m.triplets())


def rational_eigenvalues(m: SparseMatrix) -> List[Fraction]:
    """
    Distinct eigenvalues of a square matrix, all of which must be rational.

    Raises:
        NonSemisimpleActionError: if the characteristic polynomial has an
            irreducible factor of degree above one
    """
    if m.rows == 0:
        return []
    coefficients = m.to_domain_matrix().charpoly()
    poly = Poly([QQ.to_sympy(c) for c in coefficients], _x, domain="QQ")
    values = []
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() != 1:
            raise NonSemisimpleActionError(
                f"Torus element has the irrational eigenvalue factor {factor.as_expr()}"
            )
        a, b = factor.all_coeffs()
        root = -b / a
        values.append(Fraction(int(root.p), int(root.q)))
    return sorted(values)


def _eigenspace(m: SparseMatrix, value: Fraction) -> Subspace:
    shifted = m.combine(SparseMatrix.identity(m.rows), -value)
    return kernel_basis(shifted)


def weight_decompose(
    action: ModuleAction, torus: Sequence[int]
) -> Dict[Eigenvalues, int]:
    """
    Simultaneous eigenspace decomposition of commuting torus elements.

    Args:
        action: Module to decompose
        torus: g_0 basis indices of pairwise commuting even elements

    Returns:
        Map from eigenvalue tuples (one entry per torus element) to multiplicities

    Raises:
        NonSemisimpleActionError: if the torus does not act diagonalizably
    """
    matrices = [action.matrices[i] for i in torus]
    if all(_is_diagonal(m) for m in matrices):
        counts: Dict[Eigenvalues, int] = {}
        for b in range(action.dim):
            key = tuple(to_fraction(m.get(b, b)) for m in matrices)
            counts[key] = counts.get(key, 0) + 1
        return counts

    spaces: List[Tuple[Eigenvalues, Subspace]] = [((), Subspace.full(action.dim))]
    for m in matrices:
        eigenspaces = [(value, _eigenspace(m, value)) for value in rational_eigenvalues(m)]
        if sum(space.dim for _, space in eigenspaces) != action.dim:
            raise NonSemisimpleActionError(
                f"Torus element of {action.algebra.name} is not diagonalizable on {action.name}"
            )
        refined = []
        for key, space in spaces:
            for value, eigenspace in eigenspaces:
                joint = intersect(space, eigenspace)
                if joint.dim:
                    refined.append((key + (value,), joint))
        spaces = refined
    logger.debug(f"Decomposed {action.name} into {len(spaces)} weight spaces")
    return {key: space.dim for key, space in spaces}


def torus_indices(action: ModuleAction) -> List[int]:
    """g_0 basis elements that are even, of weight zero and act diagonally."""
    alg = action.algebra
    return [
        i
        for i in range(alg.dim)
        if not alg.parity(i) and alg.weight(i).is_zero() and _is_diagonal(action.matrices[i])
    ]


def label_eigenvalues(
    action: ModuleAction, torus: Optional[Sequence[int]] = None
) -> Dict[Weight, Eigenvalues]:
    """
    Torus eigenvalues on each weight of the module basis labels.

    The labels are checked against weight_decompose: every label weight must
    see a single eigenvalue tuple, and the label blocks must add up to the
    eigenspace multiplicities.

    Raises:
        InvariantViolationError: if the labels disagree with the torus action
    """
    torus = torus_indices(action) if torus is None else list(torus)
    decomposition = weight_decompose(action, torus)
    matrices = [action.matrices[i] for i in torus]
    values: Dict[Weight, Eigenvalues] = {}
    counts: Dict[Eigenvalues, int] = {}
    for b in range(action.dim):
        weight = action.module.weight(b)
        found = tuple(to_fraction(m.get(b, b)) for m in matrices)
        key = values.setdefault(weight, found)
        if key != found:
            raise InvariantViolationError(
                f"{action.name}: weight {weight} carries eigenvalues {key} and {found}"
            )
        counts[found] = counts.get(found, 0) + 1
    if counts != decomposition:
        raise InvariantViolationError(
            f"{action.name}: label weights do not match the torus decomposition"
        )
    return values


def weyl_dim(k: Sequence, n: Optional[int] = None) -> int:
    """
    Dimension of the irreducible gl(n)-module with highest weight Σ k_i ε_i.

    dim = Π_{i<j} (1 + (k_i − k_j)/(j − i))

    Raises:
        InvalidParameterError: if len(k) differs from n
        NonDominantWeightError: if k is not nonincreasing
    """
    coords = [Fraction(c) for c in k]
    if n is not None and len(coords) != n:
        raise InvalidParameterError(f"Weight has {len(coords)} coordinates, expected {n}")
    for a, b in zip(coords, coords[1:]):
        if a < b or (a - b).denominator != 1:
            raise NonDominantWeightError(f"Weight {[str(c) for c in coords]} is not dominant")
    result = Fraction(1)
    for i in range(len(coords)):
        for j in range(i + 1, len(coords)):
            result *= 1 + (coords[i] - coords[j]) / (j - i)
    return int(result)


def product_dim(weight: Weight, ranks: Optional[Tuple[int, int]] = None) -> int:
    """Dimension of the gl(m) ⊕ gl(n) irreducible with the ε- and δ-parts of the weight."""
    if ranks is not None and weight.ranks != tuple(ranks):
        raise InvalidParameterError(f"Weight ranks {weight.ranks} differ from {tuple(ranks)}")
    return weyl_dim(weight.eps) * weyl_dim(weight.delta)
