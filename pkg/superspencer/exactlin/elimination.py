"""Reduced row echelon forms via sympy's DomainMatrix.

Rows are compressed onto the columns they actually use before elimination,
so a block of a large sparse system costs only its own size. Matrices whose
fill ratio exceeds ``settings.dense_fallback_threshold`` are eliminated in
sympy's dense format.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from superspencer.config import settings
from superspencer.exactlin.vectors import Vector

logger = logging.getLogger(__name__)


def rref_rows(
    rows: Sequence[Vector],
    dense_threshold: Optional[float] = None,
) -> Tuple[List[Vector], List[int]]:
    """
    Reduce a list of sparse rows to reduced row echelon form.

    Args:
        rows: Sparse rows (index -> nonzero QQ); empty rows are ignored
        dense_threshold: Fill ratio above which dense elimination is used

    Returns:
        (echelon rows, pivot columns); row i has leading entry 1 at pivots[i],
        zeros at every other pivot column, and pivots are strictly increasing
    """
    nonzero = [row for row in rows if row]
    if not nonzero:
        return [], []

    used = sorted(set().union(*nonzero))
    local = {column: k for k, column in enumerate(used)}
    compressed = {
        i: {local[column]: value for column, value in row.items()}
        for i, row in enumerate(nonzero)
    }
    shape = (len(nonzero), len(used))
    matrix = DomainMatrix(compressed, shape, QQ)

    threshold = settings.dense_fallback_threshold if dense_threshold is None else dense_threshold
    fill = sum(len(row) for row in compressed.values()) / (shape[0] * shape[1])
    if fill > threshold:
        matrix = matrix.to_dense()

    reduced, pivots = matrix.rref()
    sdm = reduced.to_sparse().rep

    echelon: List[Vector] = []
    for i in range(len(pivots)):
        row: Dict[int, object] = sdm.get(i, {})
        echelon.append({used[column]: value for column, value in row.items() if value})
    pivot_columns = [used[p] for p in pivots]

    # Normalize leading coefficients in case the backend returned a scaled form.
    for i, pivot in enumerate(pivot_columns):
        lead = echelon[i].get(pivot)
        if lead is not None and lead != 1:
            echelon[i] = {column: value / lead for column, value in echelon[i].items()}

    if len(echelon) > 200:
        logger.debug(f"rref of {shape[0]}x{shape[1]} block: rank {len(pivot_columns)}")
    return echelon, pivot_columns


def reduce_against(
    vec: Vector, echelon: Sequence[Vector], pivots: Sequence[int]
) -> Vector:
    """Subtract echelon rows so the result vanishes at every pivot column."""
    result = dict(vec)
    for row, pivot in zip(echelon, pivots):
        coef = result.get(pivot)
        if coef:
            for column, value in row.items():
                updated = result.get(column, 0) - coef * value
                if updated:
                    result[column] = updated
                else:
                    result.pop(column, None)
    return result
