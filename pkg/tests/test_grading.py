"""Tests for depth-one pairs and reference gradings."""
import pytest

from superspencer.exactlin import SparseMatrix
from superspencer.exceptions import InvalidParameterError, MissingCentralGeneratorsError
from superspencer.grading import (
    cpe_pair,
    osp_grading,
    pe_extension_pair,
    pe_grading_tower,
    pe_pair,
    q_grading,
    reduced_pair,
    sl_depth1_grading,
    sl_reference_grading,
    sl_standard_grading,
    spe_pair,
)
from superspencer.superalg import check_jacobi


def test_periplectic_pairs():
    """Test labels, dimensions and recorded central generators of the pe pairs."""
    pe = pe_pair(3)
    assert pe.label == "pe:3"
    assert pe.superdims() == {"g-1": (3, 3), "g0": (9, 9)}
    assert pe.faithful
    assert pe.radical == (pe.g0.space.index("tau"),)
    assert spe_pair(3).radical == ()
    assert len(cpe_pair(2).radical) == 2


def test_pe_extension_label():
    """Test that the extension label carries reduced rationals."""
    pair = pe_extension_pair(3, 2, "6/2")
    assert pair.label == "pe-ext:3:2:3"
    assert pair.g0.superdim == (9, 9)


def test_pe_grading_tower():
    """Test the component dimensions of the pe(3) and spe(3) gradings."""
    pe, spe = pe_grading_tower(2)
    assert pe.component_dims() == {-1: 4, 0: 9, 1: 4, 2: 1}
    assert pe.component_superdims()[2] == (0, 1)
    assert spe.component_dims() == {-1: 4, 0: 8, 1: 4, 2: 1}
    assert check_jacobi(pe.algebra) is None


def test_pe_grading_tower_degree_zero_is_cpe():
    """Test that degree zero of the pe(n+1) grading is cpe(n) acting on V."""
    pe, _ = pe_grading_tower(2)
    pair = pe.pair()
    assert pair.g0.superdim == cpe_pair(2).g0.superdim
    assert pair.gminus1.module.superdim == (2, 2)
    assert pair.gminus1.check_representation() is None


def test_pe_grading_tower_rejects_small_n():
    """Test that n < 2 is rejected."""
    with pytest.raises(InvalidParameterError):
        pe_grading_tower(1)


def test_sl_standard_grading():
    """Test the standard grading of sl(2|3)."""
    pair = sl_standard_grading(2, 3)
    assert pair.label == "sl-std:2:3"
    assert pair.gminus1.module.superdim == (0, 6)
    assert pair.g0.dim == 12
    assert pair.faithful
    assert pair.gminus1.check_representation() is None


def test_sl_standard_grading_square_case_is_not_faithful():
    """Test that the identity of sl(n|n) acts trivially on g_{-1}."""
    pair = sl_standard_grading(2, 2)
    assert not pair.faithful
    assert pair.kernel.dim == 1


def test_sl_depth1_grading():
    """Test a mixed split V' = (2|1), U = (0|2) of sl(2|3)."""
    pair = sl_depth1_grading(2, 3, 0, 1)
    assert pair.gminus1.module.superdim == (2, 4)
    assert pair.g0.superdim == (8, 4)
    assert pair.gminus1.check_representation() is None
    assert check_jacobi(pair.g0) is None


def test_sl_depth1_matches_standard_grading():
    """Test that p = q = 0 reproduces the standard grading."""
    general = sl_depth1_grading(2, 3, 0, 0)
    standard = sl_standard_grading(2, 3)
    assert general.gminus1.matrices == standard.gminus1.matrices
    assert general.g0.space == standard.g0.space


def test_sl_depth1_rejects_degenerate_splits():
    """Test that empty factors and out-of-range parameters are rejected."""
    with pytest.raises(InvalidParameterError):
        sl_depth1_grading(2, 3, 3, 0)
    with pytest.raises(InvalidParameterError):
        sl_depth1_grading(2, 3, 2, 0)
    with pytest.raises(InvalidParameterError):
        sl_standard_grading(0, 2)


def test_sl_reference_grading():
    """Test the depth-one grading of sl(2|3) by the ε-coordinates."""
    reference = sl_reference_grading(2, 3, 0, 0)
    assert reference.component_dims() == {-1: 6, 0: 12, 1: 6}


def test_q_grading():
    """Test both summands of the queer grassmannian grading of q(3)."""
    plus = q_grading(3, 1, "+")
    minus = q_grading(3, 1, "-")
    assert plus.g0.superdim == (4, 4)
    assert plus.gminus1.module.superdim == (2, 2)
    assert minus.gminus1.module.superdim == plus.gminus1.module.superdim
    assert plus.radical is None


def test_q_grading_has_no_reduction():
    """Test that reducing a pair without recorded generators raises."""
    with pytest.raises(MissingCentralGeneratorsError):
        reduced_pair(q_grading(3, 1, "+"))
    with pytest.raises(InvalidParameterError):
        q_grading(3, 1, "x")


def test_osp_grading():
    """Test the centrally extended osp pairs."""
    pair = osp_grading(4, 2)
    assert pair.gminus1.module.superdim == (2, 2)
    assert pair.g0.superdim == (5, 4)
    assert pair.faithful
    z = pair.g0.space.index("z")
    assert pair.gminus1.matrices[z] == SparseMatrix.identity(4)
    assert osp_grading(5, 2).gminus1.module.superdim == (3, 2)


def test_reduced_pairs():
    """Test that reduction drops exactly the recorded central generators."""
    reduced = reduced_pair(sl_standard_grading(2, 3))
    assert reduced.label == "reduced:sl-std:2:3"
    assert reduced.g0.dim == 11
    assert reduced.radical == ()
    assert reduced_pair(osp_grading(4, 2)).g0.superdim == (4, 4)
    again = reduced_pair(reduced)
    assert again.g0 is reduced.g0


def test_weight_frames():
    """Test the report weight frames: trace for pe, no grading coordinate for osp."""
    for pair in (pe_pair(2), spe_pair(2), cpe_pair(2), pe_extension_pair(2, 1, 2)):
        assert pair.frame.trace_eps
    assert sl_standard_grading(2, 2).frame.is_identity
    assert q_grading(3, 1).frame.is_identity
    osp = osp_grading(4, 2)
    assert osp.frame.drop_eps == (2,)
    assert osp.gminus1.module.ranks == (2, 1)
    assert all(w.eps[1] == -1 for w in osp.gminus1.module.weight_multiplicities())
    assert reduced_pair(osp).frame == osp.frame
    assert reduced_pair(pe_pair(2)).frame.trace_eps
