"""Lie superalgebras realized by matrices on a standard super space."""
import logging
from typing import List, Optional, Sequence, Tuple

from superspencer.exactlin import Frame, SparseMatrix, Vector, koszul_sign
from superspencer.exceptions import InvariantViolationError
from superspencer.superalg.action import ModuleAction
from superspencer.superalg.algebra import LieSuperalgebra, Structure
from superspencer.superalg.space import BasisVector, SuperSpace
from superspencer.superalg.weights import Weight

logger = logging.getLogger(__name__)

Element = Tuple[str, SparseMatrix]


def supercommutator(a: SparseMatrix, pa: int, b: SparseMatrix, pb: int) -> SparseMatrix:
    """[A, B] = AB − (−1)^{p(A)p(B)} BA."""
    return (a @ b).combine(b @ a, -koszul_sign(pa, pb))


def flatten(m: SparseMatrix) -> Vector:
    """Row-major coordinates r·cols + c of a matrix."""
    return {r * m.cols + c: value for r, c, value in m.triplets()}


def unit_matrix(n: int, r: int, c: int) -> SparseMatrix:
    return SparseMatrix(n, n, {r: {c: 1}})


def homogeneous_degree(standard: SuperSpace, m: SparseMatrix) -> Tuple[int, Weight]:
    """
    Parity and weight of a matrix acting on the standard space.

    Raises:
        InvariantViolationError: if the matrix is zero or mixes parities or weights
    """
    found: Optional[Tuple[int, Weight]] = None
    for r, c, _ in m.triplets():
        degree = (
            (standard.parity(r) + standard.parity(c)) & 1,
            standard.weight(r) - standard.weight(c),
        )
        if found is None:
            found = degree
        elif found != degree:
            raise InvariantViolationError("Matrix is not homogeneous for parity and weight")
    if found is None:
        raise InvariantViolationError("Zero matrix cannot be an algebra basis element")
    return found


def matrix_algebra(
    name: str,
    standard: SuperSpace,
    elements: Sequence[Element],
    central: Optional[SparseMatrix] = None,
    grading: Optional[Sequence[int]] = None,
) -> LieSuperalgebra:
    """
    Structure constants of the span of the given matrices.

    Args:
        name: Name of the algebra
        standard: Space the matrices act on
        elements: Labeled homogeneous matrices forming a basis
        central: Optional even central matrix to quotient by; brackets are read
            modulo it
        grading: Optional Z-degree per element

    Returns:
        The algebra; its realizing matrices are kept in ``matrices``

    Raises:
        InvariantViolationError: if the matrices are dependent or do not close
    """
    basis: List[BasisVector] = []
    parities: List[int] = []
    for label, m in elements:
        parity, weight = homogeneous_degree(standard, m)
        basis.append(BasisVector(label, parity, weight))
        parities.append(parity)
    space = SuperSpace(basis, standard.ranks)

    family = [flatten(m) for _, m in elements]
    if central is not None:
        family.append(flatten(central))
    frame = Frame(standard.dim * standard.dim, family)
    dropped = len(elements)

    structure: Structure = {}
    matrices = [m for _, m in elements]
    for i, a in enumerate(matrices):
        for j, b in enumerate(matrices):
            bracket = supercommutator(a, parities[i], b, parities[j])
            if bracket.is_zero():
                continue
            coords = frame.coordinates(flatten(bracket))
            coords.pop(dropped, None)
            if coords:
                structure[(i, j)] = coords

    logger.debug(f"Built {name} from {len(elements)} matrices of size {standard.dim}")
    return LieSuperalgebra(
        name, space, structure, grading=grading, matrices=matrices, standard=standard
    )


def matrix_module(
    algebra: LieSuperalgebra, module: SuperSpace, module_matrices: Sequence[SparseMatrix]
) -> ModuleAction:
    """
    Action of a matrix algebra on a space of matrices by supercommutators.

    Args:
        algebra: Algebra carrying realizing matrices
        module: Homogeneous basis describing the module elements
        module_matrices: Matrix of each module basis element

    Returns:
        ModuleAction with ρ(x)Y = [X, Y]
    """
    if algebra.matrices is None:
        raise InvariantViolationError(f"{algebra.name} has no realizing matrices")
    frame = Frame(
        module_matrices[0].rows * module_matrices[0].cols if module_matrices else 0,
        [flatten(y) for y in module_matrices],
    )
    actions = []
    for i, x in enumerate(algebra.matrices):
        columns = {}
        for j, y in enumerate(module_matrices):
            bracket = supercommutator(x, algebra.parity(i), y, module.parity(j))
            if not bracket.is_zero():
                columns[j] = frame.coordinates(flatten(bracket))
        actions.append(SparseMatrix.from_columns(module.dim, module.dim, columns))
    return ModuleAction(algebra, module, actions, f"{algebra.name} on {len(module_matrices)} matrices")


def standard_action(algebra: LieSuperalgebra) -> ModuleAction:
    """The realizing matrices themselves, as an action on the standard space."""
    if algebra.matrices is None or algebra.standard is None:
        raise InvariantViolationError(f"{algebra.name} has no standard module")
    return ModuleAction(algebra, algebra.standard, algebra.matrices, f"standard {algebra.name}")
