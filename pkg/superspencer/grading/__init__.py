"""Depth-one pairs (g_{-1}, g_0) for the odd-metric, sl, q and osp families."""
from superspencer.grading.builders import (
    cpe_pair,
    osp_grading,
    osp_reference_grading,
    pe_extension_pair,
    pe_grading_tower,
    pe_pair,
    q_grading,
    sl_depth1_grading,
    sl_reference_grading,
    sl_standard_grading,
    spe_pair,
)
from superspencer.grading.pair import GradedPair, ReferenceGrading, reduced_pair

__all__ = [
    "GradedPair",
    "ReferenceGrading",
    "cpe_pair",
    "osp_grading",
    "osp_reference_grading",
    "pe_extension_pair",
    "pe_grading_tower",
    "pe_pair",
    "q_grading",
    "reduced_pair",
    "sl_depth1_grading",
    "sl_reference_grading",
    "sl_standard_grading",
    "spe_pair",
]
