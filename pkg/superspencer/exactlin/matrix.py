"""Sparse exact matrices stored row-wise."""
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from superspencer.exactlin.scalars import ONE, Scalar, ScalarLike, format_scalar, to_scalar
from superspencer.exactlin.vectors import Vector, add_scaled
from superspencer.exceptions import DimensionMismatchError


class SparseMatrix:
    """Immutable sparse matrix over QQ with no stored zeros."""

    __slots__ = ("rows", "cols", "_rows", "_columns")

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Optional[Mapping[int, Mapping[int, ScalarLike]]] = None,
    ):
        """
        Initialize a sparse matrix.

        Args:
            rows: Number of rows
            cols: Number of columns
            entries: Row-major mapping row -> {col: value}; zeros are dropped
        """
        if rows < 0 or cols < 0:
            raise DimensionMismatchError(f"Negative matrix shape ({rows}, {cols})")
        self.rows = rows
        self.cols = cols
        self._rows: Dict[int, Vector] = {}
        self._columns: Optional[Dict[int, Vector]] = None
        for r, row in (entries or {}).items():
            if not 0 <= r < rows:
                raise DimensionMismatchError(f"Row index {r} outside 0..{rows - 1}")
            clean: Vector = {}
            for c, value in row.items():
                if not 0 <= c < cols:
                    raise DimensionMismatchError(f"Column index {c} outside 0..{cols - 1}")
                q = to_scalar(value)
                if q:
                    clean[c] = q
            if clean:
                self._rows[r] = clean

    @classmethod
    def from_columns(
        cls, rows: int, cols: int, columns: Mapping[int, Mapping[int, ScalarLike]]
    ) -> "SparseMatrix":
        entries: Dict[int, Dict[int, ScalarLike]] = {}
        for c, column in columns.items():
            for r, value in column.items():
                entries.setdefault(r, {})[c] = value
        return cls(rows, cols, entries)

    @classmethod
    def from_dense(cls, values: Sequence[Sequence[ScalarLike]]) -> "SparseMatrix":
        rows = len(values)
        cols = len(values[0]) if rows else 0
        return cls(rows, cols, {r: dict(enumerate(row)) for r, row in enumerate(values)})

    @classmethod
    def from_triplets(
        cls, rows: int, cols: int, triplets: Iterable[Tuple[int, int, ScalarLike]]
    ) -> "SparseMatrix":
        entries: Dict[int, Vector] = {}
        for r, c, value in triplets:
            add_scaled(entries.setdefault(r, {}), ONE, {c: to_scalar(value)})
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def row(self, r: int) -> Vector:
        return self._rows.get(r, {})

    def row_items(self) -> Iterable[Tuple[int, Vector]]:
        return self._rows.items()

    def column(self, c: int) -> Vector:
        return self.columns().get(c, {})

    def columns(self) -> Dict[int, Vector]:
        """Column-major view, built once on first use."""
        if self._columns is None:
            columns: Dict[int, Vector] = {}
            for r, row in self._rows.items():
                for c, value in row.items():
                    columns.setdefault(c, {})[r] = value
            self._columns = columns
        return self._columns

    def get(self, r: int, c: int) -> Scalar:
        return self._rows.get(r, {}).get(c, QQ(0))

    def is_zero(self) -> bool:
        return not self._rows

    def apply(self, vec: Mapping[int, Scalar]) -> Vector:
        """Return M·vec."""
        result: Vector = {}
        columns = self.columns()
        for c, value in vec.items():
            column = columns.get(c)
            if column:
                add_scaled(result, value, column)
        return result

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.shape} by {other.shape}"
            )
        entries: Dict[int, Vector] = {}
        for r, row in self._rows.items():
            acc: Vector = {}
            for k, value in row.items():
                other_row = other._rows.get(k)
                if other_row:
                    add_scaled(acc, value, other_row)
            if acc:
                entries[r] = acc
        return SparseMatrix(self.rows, other.cols, entries)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self.matmul(other)

    def combine(self, other: "SparseMatrix", coef: ScalarLike = 1) -> "SparseMatrix":
        """Return self + coef * other."""
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot add {self.shape} and {other.shape}")
        q = to_scalar(coef)
        entries = {r: dict(row) for r, row in self._rows.items()}
        for r, row in other._rows.items():
            add_scaled(entries.setdefault(r, {}), q, row)
        return SparseMatrix(self.rows, self.cols, entries)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self.combine(other, 1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self.combine(other, -1)

    def scale(self, coef: ScalarLike) -> "SparseMatrix":
        q = to_scalar(coef)
        return SparseMatrix(
            self.rows,
            self.cols,
            {r: {c: q * v for c, v in row.items()} for r, row in self._rows.items()},
        )

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, self.columns())

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix(
            {r: dict(row) for r, row in self._rows.items()}, self.shape, QQ
        )

    def to_dense(self) -> List[List[Scalar]]:
        dense = [[QQ(0)] * self.cols for _ in range(self.rows)]
        for r, row in self._rows.items():
            for c, value in row.items():
                dense[r][c] = value
        return dense

    def triplets(self) -> List[Tuple[int, int, Scalar]]:
        """Entries as sorted (row, col, value) triplets."""
        return [
            (r, c, self._rows[r][c])
            for r in sorted(self._rows)
            for c in sorted(self._rows[r])
        ]

    def to_triplet_text(self) -> str:
        """Render in the audit dump format: "rows cols nnz" then "r c p/q" lines."""
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        lines.extend(f"{r} {c} {format_scalar(v)}" for r, c, v in self.triplets())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triplet_text(cls, text: str) -> "SparseMatrix":
        lines = [line for line in text.splitlines() if line.strip()]
        rows, cols, nnz = (int(x) for x in lines[0].split())
        body = [line.split() for line in lines[1:]]
        if len(body) != nnz:
            raise DimensionMismatchError(f"Header announces {nnz} entries, found {len(body)}")
        return cls.from_triplets(rows, cols, ((int(r), int(c), v) for r, c, v in body))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self.nnz))

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"
