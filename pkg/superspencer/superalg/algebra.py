"""Lie superalgebras given by exact structure constants."""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from superspencer.exactlin import (
    Scalar,
    SparseMatrix,
    Vector,
    add_scaled,
    format_scalar,
    koszul_sign,
    to_scalar,
)
from superspencer.exceptions import InvariantViolationError
from superspencer.superalg.space import BasisVector, SuperSpace
from superspencer.superalg.weights import Weight

logger = logging.getLogger(__name__)

Structure = Dict[Tuple[int, int], Vector]


@dataclass(frozen=True)
class IdentityViolation:
    """First failing identity found by an algebra or representation check."""

    kind: str  # parity | weight | antisymmetry | jacobi | grading | representation
    indices: Tuple[int, ...]
    detail: str


class LieSuperalgebra:
    """A Lie superalgebra on a SuperSpace with sparse structure constants.

    ``structure[(i, j)]`` is the coordinate vector of [x_i, x_j]; pairs with a
    zero bracket are absent.
    """

    def __init__(
        self,
        name: str,
        space: SuperSpace,
        structure: Mapping[Tuple[int, int], Mapping[int, Scalar]],
        grading: Optional[Sequence[int]] = None,
        matrices: Optional[Sequence[SparseMatrix]] = None,
        standard: Optional[SuperSpace] = None,
        raising: Optional[Sequence[int]] = None,
    ):
        """
        Initialize a Lie superalgebra.

        Args:
            name: Human-readable name, for example "spe(3)"
            space: Homogeneous basis of the algebra
            structure: Brackets of basis pairs as sparse coordinate vectors
            grading: Optional Z-degree of each basis element
            matrices: Optional realizing matrices on the standard module
            standard: The module the realizing matrices act on
            raising: Basis indices used as raising operators; defaults to the
                elements of lexicographically positive weight
        """
        self.name = name
        self.space = space
        self.structure: Structure = {}
        for pair, vec in structure.items():
            clean = {k: to_scalar(v) for k, v in vec.items() if v}
            if clean:
                self.structure[pair] = clean
        self.grading = tuple(grading) if grading is not None else None
        self.matrices = tuple(matrices) if matrices is not None else None
        self.standard = standard
        if raising is None:
            raising = [i for i, b in enumerate(space.basis) if b.weight.is_positive()]
        self.raising: Tuple[int, ...] = tuple(raising)
        self._ad: Dict[int, SparseMatrix] = {}

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def superdim(self) -> Tuple[int, int]:
        return self.space.superdim

    def parity(self, i: int) -> int:
        return self.space.parity(i)

    def weight(self, i: int) -> Weight:
        return self.space.weight(i)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.structure.get((i, j), {})

    def bracket(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Vector:
        result: Vector = {}
        for i, a in u.items():
            for j, b in v.items():
                vec = self.structure.get((i, j))
                if vec:
                    add_scaled(result, a * b, vec)
        return result

    def adjoint(self, i: int) -> SparseMatrix:
        """Matrix of ad(x_i) on the algebra; column j is [x_i, x_j]."""
        if i not in self._ad:
            columns = {
                j: self.structure[(i, j)] for j in range(self.dim) if (i, j) in self.structure
            }
            self._ad[i] = SparseMatrix.from_columns(self.dim, self.dim, columns)
        return self._ad[i]

    def degree(self, i: int) -> int:
        if self.grading is None:
            raise InvariantViolationError(f"{self.name} carries no Z-grading")
        return self.grading[i]

    def component(self, degree: int) -> List[int]:
        """Basis indices of the homogeneous component of the given degree."""
        return [i for i in range(self.dim) if self.degree(i) == degree]

    def component_dims(self) -> Dict[int, int]:
        dims: Dict[int, int] = {}
        for d in self.grading or ():
            dims[d] = dims.get(d, 0) + 1
        return dict(sorted(dims.items()))

    def with_grading(self, grading: Sequence[int], name: Optional[str] = None) -> "LieSuperalgebra":
        return LieSuperalgebra(
            name or self.name,
            self.space,
            self.structure,
            grading=grading,
            matrices=self.matrices,
            standard=self.standard,
            raising=self.raising,
        )

    def subalgebra(self, indices: Sequence[int], name: str) -> "LieSuperalgebra":
        """Restrict to the span of the given basis elements, which must close under the bracket."""
        position = {old: new for new, old in enumerate(indices)}
        structure: Structure = {}
        for a in indices:
            for b in indices:
                vec = self.structure.get((a, b))
                if not vec:
                    continue
                if any(k not in position for k in vec):
                    raise InvariantViolationError(
                        f"Span of {name} basis is not closed: "
                        f"[{self.space.label(a)}, {self.space.label(b)}] leaves it"
                    )
                structure[(position[a], position[b])] = {position[k]: c for k, c in vec.items()}
        return LieSuperalgebra(
            name,
            self.space.subset(indices),
            structure,
            grading=[self.grading[i] for i in indices] if self.grading is not None else None,
            matrices=[self.matrices[i] for i in indices] if self.matrices is not None else None,
            standard=self.standard,
            raising=[position[i] for i in self.raising if i in position],
        )

    def to_document(self) -> Dict[str, Any]:
        """JSON-ready description: basis labels, parities, weights and sparse constants."""
        return {
            "name": self.name,
            "ranks": list(self.space.ranks),
            "basis": [
                {"label": b.label, "parity": b.parity, "weight": b.weight.to_dict()}
                for b in self.space.basis
            ],
            "structure": [
                [i, j, k, format_scalar(c)]
                for (i, j) in sorted(self.structure)
                for k, c in sorted(self.structure[(i, j)].items())
            ],
            "grading": list(self.grading) if self.grading is not None else None,
            "raising": list(self.raising),
        }

    @classmethod
    def from_document(cls, document: Mapping[str, Any]) -> "LieSuperalgebra":
        ranks = tuple(document["ranks"])
        space = SuperSpace(
            [
                BasisVector(b["label"], int(b["parity"]), Weight.from_dict(b["weight"]))
                for b in document["basis"]
            ],
            ranks,
        )
        structure: Structure = {}
        for i, j, k, c in document["structure"]:
            structure.setdefault((i, j), {})[k] = to_scalar(c)
        return cls(
            document["name"],
            space,
            structure,
            grading=document.get("grading"),
            raising=document.get("raising"),
        )

    def __repr__(self) -> str:
        even, odd = self.superdim
        return f"LieSuperalgebra({self.name}, {even}|{odd})"


def check_jacobi(alg: LieSuperalgebra) -> Optional[IdentityViolation]:
    """
    Verify parity, weights, super-antisymmetry, super Jacobi and the grading.

    Args:
        alg: Algebra to check

    Returns:
        The first violation found, or None when every identity holds
    """
    n = alg.dim
    parities = alg.space.parities()

    for (i, j), vec in sorted(alg.structure.items()):
        for k in vec:
            if parities[k] != (parities[i] + parities[j]) & 1:
                return IdentityViolation("parity", (i, j, k), f"[{i},{j}] has a component of wrong parity at {k}")
            if alg.weight(k) != alg.weight(i) + alg.weight(j):
                return IdentityViolation("weight", (i, j, k), f"[{i},{j}] has a component of wrong weight at {k}")
            if alg.grading is not None and alg.grading[k] != alg.grading[i] + alg.grading[j]:
                return IdentityViolation("grading", (i, j, k), f"[{i},{j}] leaves degree {alg.grading[i] + alg.grading[j]}")

    for i in range(n):
        for j in range(i, n):
            forward = alg.bracket_basis(i, j)
            backward = alg.bracket_basis(j, i)
            expected: Vector = {}
            add_scaled(expected, to_scalar(-koszul_sign(parities[i], parities[j])), backward)
            if forward != expected:
                return IdentityViolation("antisymmetry", (i, j), f"[{i},{j}] != -(-1)^(p p)[{j},{i}]")

    # [x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]
    for x in range(n):
        for y in range(n):
            xy = alg.bracket_basis(x, y)
            sign = to_scalar(koszul_sign(parities[x], parities[y]))
            for z in range(n):
                lhs = alg.bracket({x: to_scalar(1)}, alg.bracket_basis(y, z))
                rhs = alg.bracket(xy, {z: to_scalar(1)})
                add_scaled(rhs, sign, alg.bracket({y: to_scalar(1)}, alg.bracket_basis(x, z)))
                if lhs != rhs:
                    return IdentityViolation("jacobi", (x, y, z), f"Jacobi fails on ({x},{y},{z})")

    logger.debug(f"Jacobi identity verified on {alg.name} ({n}^3 triples)")
    return None
