"""Tests for Cartan prolongation towers."""
import pytest

from superspencer.exactlin import ONE, make_vector
from superspencer.exceptions import (
    InvalidParameterError,
    NotInStoredSubspaceError,
    TruncatedTowerError,
)
from superspencer.grading import (
    cpe_pair,
    osp_grading,
    pe_grading_tower,
    pe_pair,
    q_grading,
    sl_standard_grading,
)
from superspencer.prolong import cartan_prolong, prolong_step, tower_bracket


def test_vect_0_2_tower(vect2_tower):
    """Test that the standard pair of sl(1|2) prolongs to vect(0|2)."""
    assert vect2_tower.dims() == {-1: 2, 0: 4, 1: 2, 2: 0}
    assert vect2_tower.stabilized
    assert not vect2_tower.truncated
    assert vect2_tower.dim(7) == 0


def test_vect_0_3_tower():
    """Test that vect(0|3) has total dimension 3 * 2^3."""
    tower = cartan_prolong(sl_standard_grading(1, 3))
    assert tower.dims() == {-1: 3, 0: 9, 1: 9, 2: 3, 3: 0}
    assert sum(tower.dims().values()) == 3 * 2**3


def test_sl_standard_tower_is_the_algebra():
    """Test that sl(2|3) is the full prolongation of its standard pair."""
    tower = cartan_prolong(sl_standard_grading(2, 3))
    assert tower.dims() == {-1: 6, 0: 12, 1: 6, 2: 0}


def test_square_sl_tower_carries_symmetric_powers():
    """Test g_k = h(0|4)_k + S^k(g_{-1}*) for the non-faithful sl(2|2) pair."""
    tower = cartan_prolong(sl_standard_grading(2, 2))
    assert tower.dims() == {-1: 4, 0: 7, 1: 8, 2: 7, 3: 4, 4: 1, 5: 0}


@pytest.mark.parametrize("pair", [lambda: pe_pair(2), lambda: pe_pair(3)])
def test_periplectic_pairs_do_not_prolong(pair, spe2_tower):
    """Test g_1 = 0 for pe(n) and spe(n) on V."""
    assert cartan_prolong(pair()).dims()[1] == 0
    assert spe2_tower.dims() == {-1: 4, 0: 7, 1: 0}


def test_cpe_prolongs_to_pe():
    """Test that cpe(n) prolongs to the pe(n+1) grading."""
    for n in (2, 3):
        tower = cartan_prolong(cpe_pair(n))
        assert [tower.dim(k) for k in range(1, 4)] == [2 * n, 1, 0]


@pytest.mark.parametrize("index", [0, 1])
def test_reference_gradings_are_recovered(index):
    """Test that degree zero of the pe(3) and spe(3) gradings prolongs to the whole algebra."""
    reference = pe_grading_tower(2)[index]
    tower = cartan_prolong(reference.pair())
    expected = reference.component_dims()
    for k, dim in expected.items():
        assert tower.dim(k) == dim
    assert tower.dim(max(expected) + 1) == 0


def test_queer_and_osp_towers_stop_after_one_step():
    """Test g_1 = g_{-1}* and g_2 = 0 for q(3) and osp gradings."""
    for pair in (q_grading(3, 1, "+"), osp_grading(4, 2)):
        tower = cartan_prolong(pair)
        assert tower.dim(1) == pair.dim_minus1
        assert tower.dim(2) == 0


def test_terms_are_supersymmetric():
    """Test super-symmetry of every flattened term."""
    tower = cartan_prolong(sl_standard_grading(1, 3))
    for k in range(1, 3):
        assert tower.check_symmetry(k)


def test_truncated_tower():
    """Test that asking past the cut of an unstabilized tower raises."""
    tower = cartan_prolong(sl_standard_grading(2, 2), 2)
    assert tower.truncated
    assert tower.has(2) and not tower.has(3)
    with pytest.raises(TruncatedTowerError):
        tower.dim(3)


def test_kmax_must_be_positive():
    """Test that a negative order limit is rejected."""
    with pytest.raises(InvalidParameterError):
        cartan_prolong(sl_standard_grading(1, 2), -1)


def test_zero_kmax_is_rejected_not_replaced(restore_settings, vect2_pair):
    """Test that kmax=0 raises instead of falling back to settings or the default."""
    restore_settings.kmax = 3
    with pytest.raises(InvalidParameterError):
        cartan_prolong(vect2_pair, 0)


def test_default_limit_comes_from_settings(restore_settings, vect2_pair):
    """Test that settings.kmax caps the tower when no limit is passed."""
    restore_settings.kmax = 1
    tower = cartan_prolong(vect2_pair)
    assert tower.top == 1
    assert tower.truncated


def test_append_rejects_wrong_ambient(vect2_pair):
    """Test that a term of the wrong ambient dimension is rejected."""
    tower = cartan_prolong(vect2_pair, 1)
    step = prolong_step(tower)
    assert step.ambient_dim == tower.ambient_dim(2)
    with pytest.raises(InvalidParameterError):
        tower.append(prolong_step(cartan_prolong(sl_standard_grading(1, 3), 1)))


def test_tower_bracket_matches_bracket_matrix(vect2_tower):
    """Test evaluation of g_1 elements on g_{-1}."""
    for r in range(vect2_tower.dim(1)):
        x = vect2_tower.element(1, {r: ONE})
        for j in range(vect2_tower.n):
            expected = vect2_tower.bracket_matrix(1, j).column(r)
            assert tower_bracket(vect2_tower, 1, x, {j: ONE}) == expected


def test_tower_bracket_degree_zero_is_the_action(vect2_tower):
    """Test that brackets of g_0 with g_{-1} use the module matrices."""
    pair = vect2_tower.pair
    for a, matrix in enumerate(pair.gminus1.matrices):
        assert tower_bracket(vect2_tower, 0, {a: ONE}, {0: ONE}) == matrix.column(0)


def test_tower_bracket_rejects_non_members(vect2_tower):
    """Test that an ambient vector outside g_1 is rejected."""
    with pytest.raises(NotInStoredSubspaceError):
        tower_bracket(vect2_tower, 1, make_vector({0: 1}), {0: ONE})
    with pytest.raises(InvalidParameterError):
        tower_bracket(vect2_tower, -1, {}, {0: ONE})


def test_tower_actions_are_representations(vect2_tower):
    """Test the induced g_0-module structure on each term."""
    for k in range(-1, 2):
        action = vect2_tower.action(k)
        assert action.dim == vect2_tower.dim(k)
        assert action.check_representation() is None
