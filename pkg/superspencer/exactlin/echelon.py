"""Incremental echelon bases and coordinate frames.

``IncrementalEchelon`` grows a span one vector at a time; submodule closure
uses it so each new image vector costs one sparse reduction instead of a full
re-elimination. ``Frame`` expresses vectors in a fixed, not necessarily
echelon, independent family (for example a list of realizing matrices).
"""
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from superspencer.exactlin.elimination import rref_rows
from superspencer.exactlin.scalars import ONE, Scalar, to_scalar
from superspencer.exactlin.subspace import Subspace
from superspencer.exactlin.vectors import Vector, add_scaled
from superspencer.exceptions import ContainmentError, InvariantViolationError


class IncrementalEchelon:
    """A span kept fully reduced: each stored row is 1 at its own pivot and 0 at the others."""

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: Dict[int, Vector] = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Mapping[int, Scalar]) -> Vector:
        result = dict(vec)
        for pivot in [p for p in result if p in self._rows]:
            coef = result.get(pivot)
            if coef:
                add_scaled(result, -coef, self._rows[pivot])
        return result

    def add(self, vec: Mapping[int, Scalar]) -> Optional[Vector]:
        """Insert vec; returns the new reduced row, or None if vec was already in the span."""
        residue = self.reduce(vec)
        if not residue:
            return None
        pivot = min(residue)
        lead = residue[pivot]
        row = {column: value / lead for column, value in residue.items()}
        for other in self._rows.values():
            coef = other.get(pivot)
            if coef:
                add_scaled(other, -coef, row)
        self._rows[pivot] = row
        return row

    def extend(self, vectors: Iterable[Mapping[int, Scalar]]) -> List[Vector]:
        added = []
        for vec in vectors:
            row = self.add(vec)
            if row is not None:
                added.append(row)
        return added

    def contains(self, vec: Mapping[int, Scalar]) -> bool:
        return not self.reduce(vec)

    def rows(self) -> List[Vector]:
        return [self._rows[p] for p in sorted(self._rows)]

    def to_subspace(self) -> Subspace:
        return Subspace.from_vectors(self.ambient_dim, self.rows())


class Frame:
    """Coordinates with respect to a linearly independent family of vectors."""

    def __init__(self, ambient_dim: int, family: Sequence[Mapping[int, Scalar]]):
        """
        Initialize a frame.

        Args:
            ambient_dim: Dimension of the coordinate space the family lives in
            family: Independent vectors; coordinates refer to their positions
        """
        self.ambient_dim = ambient_dim
        self.size = len(family)
        augmented = []
        for i, vec in enumerate(family):
            row = {c: to_scalar(v) for c, v in vec.items() if v}
            row[ambient_dim + i] = ONE
            augmented.append(row)
        echelon, pivots = rref_rows(augmented)
        if any(p >= ambient_dim for p in pivots):
            raise InvariantViolationError("Frame family is linearly dependent")
        self._pivots = pivots
        self._ambient_rows = [
            {c: v for c, v in row.items() if c < ambient_dim} for row in echelon
        ]
        self._coefficient_rows = [
            {c - ambient_dim: v for c, v in row.items() if c >= ambient_dim} for row in echelon
        ]

    def coordinates(self, vec: Mapping[int, Scalar]) -> Vector:
        """Coefficients c with vec = Σ c_i family[i]; raises if vec is outside the span."""
        coords: Vector = {}
        residue = dict(vec)
        for pivot, ambient_row, coefficient_row in zip(
            self._pivots, self._ambient_rows, self._coefficient_rows
        ):
            coef = residue.get(pivot)
            if coef:
                add_scaled(residue, -coef, ambient_row)
                add_scaled(coords, coef, coefficient_row)
        if residue:
            raise ContainmentError("Vector lies outside the span of the frame")
        return coords
