"""Weights, highest vectors, composition series and splitness of g_0-modules."""
from superspencer.repmod.composition import (
    CompositionSeries,
    Factor,
    composition_report,
    composition_series,
    minimal_submodule,
    splitness_flags,
)
from superspencer.repmod.highest import HighestVector, generate_submodule, highest_vectors
from superspencer.repmod.splitting import detect_splitting
from superspencer.repmod.weights import (
    label_eigenvalues,
    product_dim,
    rational_eigenvalues,
    torus_indices,
    weight_decompose,
    weyl_dim,
)

__all__ = [
    "CompositionSeries",
    "Factor",
    "HighestVector",
    "composition_report",
    "composition_series",
    "detect_splitting",
    "generate_submodule",
    "highest_vectors",
    "label_eigenvalues",
    "minimal_submodule",
    "product_dim",
    "rational_eigenvalues",
    "splitness_flags",
    "torus_indices",
    "weight_decompose",
    "weyl_dim",
]
