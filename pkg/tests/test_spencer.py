"""Tests for Spencer cochains, differentials and cohomology."""
import pytest

from superspencer.exactlin import SparseMatrix, kernel_basis
from superspencer.exceptions import InvalidParameterError
from superspencer.grading import GradedPair, cpe_pair, pe_pair, sl_standard_grading, spe_pair
from superspencer.prolong import cartan_prolong
from superspencer.spencer import (
    SpencerComplex,
    cochain_action,
    cochain_space,
    euler_check,
    spencer_cohomology,
    spencer_differential,
)
from superspencer.superalg import ModuleAction, SuperSpace


def all_ones(tower, k, s):
    """A differential of the right shape that is not a complex."""
    m = spencer_differential(tower, k, s)
    return SparseMatrix(m.rows, m.cols, {r: {c: 1 for c in range(m.cols)} for r in range(m.rows)})


@pytest.fixture
def cpe2_tower():
    return cartan_prolong(cpe_pair(2))


def test_cochain_dimensions(vect2_tower, cpe2_tower):
    """Test dim C^{k,s} = dim g_{k-s} * dim E^s(g_{-1}*)."""
    assert cochain_space(vect2_tower, 1, 2).dim == 2 * 3
    assert cochain_space(cpe2_tower, 2, 2).dim == 9 * 8
    assert cochain_space(vect2_tower, 1, 0).dim == vect2_tower.dim(1)
    assert cochain_space(vect2_tower, 1, 3).dim == 0


def test_cochain_space_rejects_negative_degree(vect2_tower):
    """Test that a negative cochain degree is rejected."""
    with pytest.raises(InvalidParameterError):
        cochain_space(vect2_tower, 1, -1)


def test_differential_shape(vect2_tower):
    """Test that ∂^{k,s} maps C^{k,s} to C^{k,s+1}."""
    d = spencer_differential(vect2_tower, 1, 1)
    assert d.shape == (cochain_space(vect2_tower, 1, 2).dim, cochain_space(vect2_tower, 1, 1).dim)
    assert spencer_differential(vect2_tower, 1, 2).is_zero()


@pytest.mark.parametrize("k", [1, 2])
def test_kernel_of_first_differential_is_next_term(vect2_tower, cpe2_tower, k):
    """Test Ker ∂^{k,1} = g_k inside g_{k-1} ⊗ g_{-1}*."""
    for tower in (vect2_tower, cpe2_tower):
        assert kernel_basis(spencer_differential(tower, k, 1)) == tower.terms[k]


@pytest.mark.parametrize("k", [1, 2])
def test_complex_axioms(vect2_tower, spe2_tower, cpe2_tower, k):
    """Test ∂∂ = 0, equivariance and the rank identity."""
    for tower in (vect2_tower, spe2_tower, cpe2_tower):
        complex_ = SpencerComplex(tower, k)
        assert complex_.check_square_zero()
        assert complex_.check_equivariance() is None
        assert complex_.check_rank_identity()
        assert [space.dim for space in complex_.spaces] == [
            cochain_space(tower, k, s).dim for s in (1, 2, 3)
        ]


def test_cochain_actions_are_representations(spe2_tower):
    """Test the g_0-module structure of the cochain spaces."""
    for s in (1, 2):
        assert cochain_action(spe2_tower, 1, s).check_representation() is None


@pytest.mark.parametrize("n", [2, 3])
def test_pe_has_no_order_one_structure_functions(n):
    """Test H^{1,2} = 0 for pe(n) and cpe(n)."""
    for pair in (pe_pair(n), cpe_pair(n)):
        assert spencer_cohomology(cartan_prolong(pair), 1).dim == 0


@pytest.mark.parametrize("n", [2, 3])
def test_spe_order_one_structure_functions(n):
    """Test dim H^{1,2} = 2n for spe(n)."""
    cohomology = spencer_cohomology(cartan_prolong(spe_pair(n)), 1)
    assert cohomology.dim == 2 * n
    assert cohomology.transversal.dim == 2 * n
    module = cohomology.module()
    assert module.dim == 2 * n
    assert module.check_representation() is None


def test_cohomology_bookkeeping(spe2_tower):
    """Test that the image sits in the kernel and the transversal complements it."""
    cohomology = spencer_cohomology(spe2_tower, 1)
    assert cohomology.image.is_subspace_of(cohomology.kernel)
    assert cohomology.image_in_kernel.dim == cohomology.image.dim
    assert cohomology.image.sum(cohomology.transversal) == cohomology.kernel


@pytest.mark.parametrize("n", [2, 3])
def test_vect_is_rigid(n):
    """Test H^{k,2} = 0 for vect(0|n) at every computed order."""
    tower = cartan_prolong(sl_standard_grading(1, n))
    for k in range(1, n + 1):
        assert spencer_cohomology(tower, k).dim == 0


def test_cohomology_in_other_degrees(vect2_tower):
    """Test H^{k,0} and H^{k,1}, and the degree range."""
    assert spencer_cohomology(vect2_tower, 1, 0).dim == 0
    assert spencer_cohomology(vect2_tower, 1, 1).dim == 0
    with pytest.raises(InvalidParameterError):
        spencer_cohomology(vect2_tower, 1, 4)


def test_explicit_differential_matches_blockwise(vect2_tower, spe2_tower):
    """Test that the dense path through an explicit differential agrees with the blockwise one."""
    for tower in (vect2_tower, spe2_tower):
        blockwise = spencer_cohomology(tower, 1, 2)
        explicit = spencer_cohomology(tower, 1, 2, differential=spencer_differential)
        assert explicit.kernel == blockwise.kernel
        assert explicit.image == blockwise.image


@pytest.mark.parametrize("k", [1, 2])
def test_euler_check(vect2_tower, spe2_tower, k):
    """Test that alternating sums of cochains and cohomology agree."""
    assert euler_check(vect2_tower, k)
    assert euler_check(spe2_tower, 1)


def test_euler_check_detects_a_broken_differential(vect2_tower):
    """Test that a map whose square is nonzero fails the row check."""
    assert not euler_check(vect2_tower, 1, differential=all_ones)


def permuted_pair(pair, order):
    """The same pair with the g_{-1} basis listed in another order."""
    position = {old: new for new, old in enumerate(order)}
    module = SuperSpace([pair.gminus1.module.basis[i] for i in order], pair.gminus1.module.ranks)
    matrices = [
        SparseMatrix.from_triplets(
            m.rows, m.cols, [(position[r], position[c], v) for r, c, v in m.triplets()]
        )
        for m in pair.gminus1.matrices
    ]
    action = ModuleAction(pair.g0, module, matrices, f"{pair.gminus1.name} permuted")
    return GradedPair(f"{pair.label}:permuted", pair.g0, action, pair.radical, pair.frame)


@pytest.mark.parametrize(
    "pair, orders",
    [
        (spe_pair(2), [1, 2]),
        (sl_standard_grading(1, 2), [1, 2, 3]),
        (sl_standard_grading(2, 2), [1]),
    ],
)
def test_cohomology_dims_do_not_depend_on_basis_order(pair, orders):
    """Test that reversing or rotating the g_{-1} basis leaves every dim H^{k,2} unchanged."""
    dim = pair.dim_minus1
    limit = max(orders) + 1
    expected = [spencer_cohomology(cartan_prolong(pair, limit), k).dim for k in orders]
    for order in (list(reversed(range(dim))), [(i + 1) % dim for i in range(dim)]):
        tower = cartan_prolong(permuted_pair(pair, order), limit)
        assert [spencer_cohomology(tower, k).dim for k in orders] == expected
