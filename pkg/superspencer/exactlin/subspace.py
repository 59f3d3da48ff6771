"""Subspaces of Q^n stored in canonical reduced row echelon form."""
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from superspencer.exactlin.elimination import reduce_against, rref_rows
from superspencer.exactlin.scalars import ONE, Scalar, to_scalar
from superspencer.exactlin.vectors import Vector
from superspencer.exceptions import ContainmentError, DimensionMismatchError


class Subspace:
    """A subspace of an ambient coordinate space.

    The basis is the reduced row echelon form of any spanning set, so equal
    subspaces have identical stored bases regardless of how they were built.
    """

    __slots__ = ("ambient_dim", "basis", "pivots", "_pivot_row")

    def __init__(self, ambient_dim: int, basis: Sequence[Vector], pivots: Sequence[int]):
        # Trusted constructor: callers pass an already reduced echelon basis.
        self.ambient_dim = ambient_dim
        self.basis: Tuple[Vector, ...] = tuple(basis)
        self.pivots: Tuple[int, ...] = tuple(pivots)
        self._pivot_row: Dict[int, int] = {p: i for i, p in enumerate(self.pivots)}

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Mapping[int, Scalar]]) -> "Subspace":
        """Span of the given vectors."""
        rows = []
        for vec in vectors:
            for index in vec:
                if not 0 <= index < ambient_dim:
                    raise DimensionMismatchError(
                        f"Coordinate {index} outside ambient dimension {ambient_dim}"
                    )
            rows.append({i: to_scalar(v) for i, v in vec.items() if v})
        basis, pivots = rref_rows(rows)
        return cls(ambient_dim, basis, pivots)

    @classmethod
    def from_blocks(
        cls, ambient_dim: int, blocks: Iterable[Tuple[Sequence[Vector], Sequence[int]]]
    ) -> "Subspace":
        """Merge echelon bases of blocks with pairwise disjoint supports.

        Sorting the union by pivot yields the canonical form of the sum.
        """
        pairs: List[Tuple[int, Vector]] = []
        for rows, pivots in blocks:
            pairs.extend(zip(pivots, rows))
        pairs.sort(key=lambda item: item[0])
        return cls(ambient_dim, [row for _, row in pairs], [p for p, _ in pairs])

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, [], [])

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, [{i: ONE} for i in range(ambient_dim)], range(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, vec: Mapping[int, Scalar]) -> Vector:
        """Remainder of vec after eliminating every pivot coordinate."""
        return reduce_against(dict(vec), self.basis, self.pivots)

    def contains(self, vec: Mapping[int, Scalar]) -> bool:
        return not self.reduce(vec)

    def coordinates(self, vec: Mapping[int, Scalar], check: bool = True) -> Vector:
        """Coordinates of vec in the echelon basis (row index -> coefficient)."""
        coords = {self._pivot_row[p]: vec[p] for p in self.pivots if vec.get(p)}
        if check:
            residue = dict(vec)
            for i, coef in coords.items():
                for column, value in self.basis[i].items():
                    updated = residue.get(column, 0) - coef * value
                    if updated:
                        residue[column] = updated
                    else:
                        residue.pop(column, None)
            if residue:
                raise ContainmentError("Vector does not lie in the subspace")
        return coords

    def vector(self, coords: Mapping[int, Scalar]) -> Vector:
        """Ambient vector with the given echelon-basis coordinates."""
        result: Vector = {}
        for i, coef in coords.items():
            if not coef:
                continue
            for column, value in self.basis[i].items():
                updated = result.get(column, 0) + coef * value
                if updated:
                    result[column] = updated
                else:
                    result.pop(column, None)
        return result

    def complement_indices(self) -> List[int]:
        """Coordinates not used as pivots; their unit vectors span a complement."""
        pivots = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in pivots]

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(other.contains(row) for row in self.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.from_vectors(self.ambient_dim, list(self.basis) + list(other.basis))

    def annihilator(self) -> "Subspace":
        """Linear forms vanishing on the subspace, as vectors of the dual space."""
        pivots = set(self.pivots)
        forms = []
        for free in range(self.ambient_dim):
            if free in pivots:
                continue
            form = {free: ONE}
            for row, pivot in zip(self.basis, self.pivots):
                value = row.get(free)
                if value:
                    form[pivot] = -value
            forms.append(form)
        return Subspace.from_vectors(self.ambient_dim, forms)

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f"Ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.pivots))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"
