"""Super vector spaces with labeled, parity-tagged, weighted bases."""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from superspencer.exceptions import DimensionMismatchError, InvalidParameterError
from superspencer.superalg.weights import Weight


@dataclass(frozen=True)
class BasisVector:
    label: str
    parity: int
    weight: Weight


class SuperSpace:
    """An ordered homogeneous basis; labels are unique and weights share one rank pair."""

    def __init__(self, basis: Sequence[BasisVector], ranks: Optional[Tuple[int, int]] = None):
        """
        Initialize a super space.

        Args:
            basis: Homogeneous basis vectors in their canonical order
            ranks: (ε-rank, δ-rank) of the weights; inferred from the basis when omitted
        """
        self.basis: Tuple[BasisVector, ...] = tuple(basis)
        self._index: Dict[str, int] = {}
        for i, vector in enumerate(self.basis):
            if vector.label in self._index:
                raise InvalidParameterError(f"Duplicate basis label '{vector.label}'")
            self._index[vector.label] = i
        if ranks is None:
            ranks = self.basis[0].weight.ranks if self.basis else (0, 0)
        for vector in self.basis:
            if vector.weight.ranks != ranks:
                raise DimensionMismatchError(
                    f"Basis vector '{vector.label}' has weight ranks {vector.weight.ranks}, "
                    f"expected {ranks}"
                )
        self.ranks = ranks

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def superdim(self) -> Tuple[int, int]:
        odd = sum(1 for v in self.basis if v.parity)
        return (self.dim - odd, odd)

    def parity(self, i: int) -> int:
        return self.basis[i].parity

    def weight(self, i: int) -> Weight:
        return self.basis[i].weight

    def label(self, i: int) -> str:
        return self.basis[i].label

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidParameterError(f"No basis vector labeled '{label}'") from None

    def parities(self) -> List[int]:
        return [v.parity for v in self.basis]

    def blocks(self) -> Dict[Tuple[int, Weight], List[int]]:
        """Basis indices grouped by (parity, weight), in first-appearance order."""
        groups: Dict[Tuple[int, Weight], List[int]] = {}
        for i, vector in enumerate(self.basis):
            groups.setdefault((vector.parity, vector.weight), []).append(i)
        return groups

    def weight_multiplicities(self) -> Dict[Weight, int]:
        counts: Dict[Weight, int] = {}
        for vector in self.basis:
            counts[vector.weight] = counts.get(vector.weight, 0) + 1
        return counts

    def subset(self, indices: Iterable[int]) -> "SuperSpace":
        return SuperSpace([self.basis[i] for i in indices], self.ranks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperSpace):
            return NotImplemented
        return self.basis == other.basis and self.ranks == other.ranks

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        even, odd = self.superdim
        return f"SuperSpace({even}|{odd})"


def tensor_space(a: SuperSpace, b: SuperSpace) -> SuperSpace:
    """Basis of ordered pairs (i, j) at position i·dim(b) + j; parity and weight add."""
    if a.ranks != b.ranks and a.dim and b.dim:
        raise DimensionMismatchError(f"Weight ranks differ: {a.ranks} vs {b.ranks}")
    ranks = a.ranks if a.dim else b.ranks
    basis = [
        BasisVector(
            f"{u.label}⊗{v.label}",
            (u.parity + v.parity) & 1,
            u.weight + v.weight,
        )
        for u in a.basis
        for v in b.basis
    ]
    return SuperSpace(basis, ranks)


def dual_space(v: SuperSpace) -> SuperSpace:
    """Dual basis ṽ_i with the parity of v_i and weight −wt(v_i)."""
    return SuperSpace(
        [BasisVector(f"{b.label}~", b.parity, -b.weight) for b in v.basis], v.ranks
    )
