"""Exact sparse linear algebra over the rationals."""
from superspencer.exactlin.echelon import Frame, IncrementalEchelon
from superspencer.exactlin.matrix import SparseMatrix
from superspencer.exactlin.ops import (
    block_image,
    block_kernel,
    image_basis,
    intersect,
    kernel_basis,
    quotient_dim,
    rank,
    solve,
    solve_sparse,
)
from superspencer.exactlin.scalars import (
    ONE,
    ZERO,
    Scalar,
    format_scalar,
    koszul_sign,
    parse_scalar,
    to_fraction,
    to_scalar,
)
from superspencer.exactlin.subspace import Subspace
from superspencer.exactlin.vectors import Vector, add_scaled, make_vector

__all__ = [
    "Frame",
    "IncrementalEchelon",
    "ONE",
    "Scalar",
    "SparseMatrix",
    "Subspace",
    "Vector",
    "ZERO",
    "add_scaled",
    "block_image",
    "block_kernel",
    "format_scalar",
    "image_basis",
    "intersect",
    "kernel_basis",
    "koszul_sign",
    "make_vector",
    "parse_scalar",
    "quotient_dim",
    "rank",
    "solve",
    "solve_sparse",
    "to_fraction",
    "to_scalar",
]
