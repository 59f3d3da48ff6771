"""Tests for weights, highest vectors, composition series and splitting."""
from fractions import Fraction
from itertools import product

import pytest

from superspencer.exactlin import SparseMatrix, Subspace, make_vector
from superspencer.exceptions import (
    InvalidParameterError,
    InvariantViolationError,
    NonDominantWeightError,
    NonSemisimpleActionError,
)
from superspencer.grading import q_grading, spe_pair
from superspencer.prolong import cartan_prolong
from superspencer.repmod import (
    composition_report,
    composition_series,
    detect_splitting,
    generate_submodule,
    highest_vectors,
    label_eigenvalues,
    product_dim,
    rational_eigenvalues,
    torus_indices,
    weight_decompose,
    weyl_dim,
)
from superspencer.schemas.reports import WeightModel
from superspencer.spencer import spencer_cohomology
from superspencer.superalg import (
    BasisVector,
    ModuleAction,
    SuperSpace,
    Weight,
    WeightFrame,
    adjoint_action,
    build_gl,
)


def count_patterns(top):
    """Number of Gelfand-Tsetlin patterns with the given top row."""
    if len(top) <= 1:
        return 1
    ranges = [range(top[i + 1], top[i] + 1) for i in range(len(top) - 1)]
    return sum(count_patterns(list(row)) for row in product(*ranges))


def dominant_weights(n, low=-3, high=3):
    for coords in product(range(low, high + 1), repeat=n):
        if all(a >= b for a, b in zip(coords, coords[1:])):
            yield list(coords)


def center_of(alg):
    """Span of the identity matrix inside a gl algebra."""
    diagonal = [f"E[{b.label},{b.label}]" for b in alg.standard.basis]
    indices = [alg.space.index(label) for label in diagonal]
    return Subspace.from_vectors(alg.dim, [make_vector({i: 1 for i in indices})])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_weyl_dim_counts_patterns(n):
    """Test the dimension formula against a count of interlacing patterns."""
    for k in dominant_weights(n):
        assert weyl_dim(k, n) == count_patterns(k)


def test_weyl_dim_examples():
    """Test small gl(3) dimensions and half-integral shifts."""
    assert weyl_dim([1, 0, 0]) == 3
    assert weyl_dim([2, 1, 0]) == 8
    assert weyl_dim(["1/2", "1/2"]) == 1
    assert weyl_dim([]) == 1


def test_weyl_dim_rejects_bad_weights():
    """Test non-dominant, non-integral and mis-sized weights."""
    with pytest.raises(NonDominantWeightError):
        weyl_dim([0, 1])
    with pytest.raises(NonDominantWeightError):
        weyl_dim(["1/2", 0])
    with pytest.raises(InvalidParameterError):
        weyl_dim([1, 0], 3)


def test_product_dim():
    """Test dimensions of gl(m) ⊕ gl(n) irreducibles."""
    assert product_dim(Weight.make([1, 0], [1, 0, 0])) == 6
    assert product_dim(Weight.make([3, 0], [1, 0, 0, 0])) == 16
    with pytest.raises(InvalidParameterError):
        product_dim(Weight.make([1, 0], [0]), (2, 2))


def test_rational_eigenvalues():
    """Test rational spectra and rejection of irrational ones."""
    assert rational_eigenvalues(SparseMatrix.from_dense([[2, 1], [1, 2]])) == [1, 3]
    assert rational_eigenvalues(SparseMatrix.zero(0, 0)) == []
    with pytest.raises(NonSemisimpleActionError):
        rational_eigenvalues(SparseMatrix.from_dense([[0, -1], [1, 0]]))


def test_weight_decompose_diagonal():
    """Test the weight spaces of the adjoint module of gl(2)."""
    alg, _ = build_gl(2, 0)
    adjoint = adjoint_action(alg)
    torus = torus_indices(adjoint)
    assert [alg.space.label(i) for i in torus] == ["E[e1,e1]", "E[e2,e2]"]
    assert weight_decompose(adjoint, torus) == {(0, 0): 2, (1, -1): 1, (-1, 1): 1}


def test_weight_decompose_after_change_of_basis():
    """Test simultaneous eigenspaces when the torus is not diagonal."""
    alg, action = build_gl(2, 0)
    p = SparseMatrix.from_dense([[1, 1], [0, 1]])
    p_inv = SparseMatrix.from_dense([[1, -1], [0, 1]])
    conjugated = ModuleAction(alg, action.module, [p_inv @ m @ p for m in action.matrices])
    torus = [alg.space.index("E[e1,e1]"), alg.space.index("E[e2,e2]")]
    assert weight_decompose(conjugated, torus) == {(0, 1): 1, (1, 0): 1}


def test_highest_vectors_of_standard_module():
    """Test that e1 is the only highest vector of the gl(2|1) standard module."""
    _, action = build_gl(2, 1)
    found = highest_vectors(action)
    assert len(found) == 1
    assert found[0].vector == make_vector({0: 1})
    assert found[0].weight == Weight.make([1, 0], [0])


def test_highest_vectors_modulo():
    """Test that vectors of a quotient are found modulo the submodule."""
    alg, _ = build_gl(2, 0)
    adjoint = adjoint_action(alg)
    center = center_of(alg)
    found = highest_vectors(adjoint, modulo=center)
    assert [hv.weight for hv in found] == [Weight.make([1, -1])]


def test_generate_submodule():
    """Test closure under the action from a single seed."""
    alg, action = build_gl(2, 1)
    assert generate_submodule(action, [make_vector({2: 1})]).dim == 3
    adjoint = adjoint_action(build_gl(2, 0)[0])
    e12 = make_vector({build_gl(2, 0)[0].space.index("E[e1,e2]"): 1})
    assert generate_submodule(adjoint, [e12]).dim == 3
    assert generate_submodule(adjoint, []).dim == 0


def test_direct_sum_splits():
    """Test that the center of gl(2) has an invariant complement."""
    alg, _ = build_gl(2, 0)
    adjoint = adjoint_action(alg)
    assert detect_splitting(adjoint, center_of(alg))


def test_gl_1_1_adjoint_does_not_split():
    """Test that the center of gl(1|1) has no invariant complement."""
    alg, _ = build_gl(1, 1)
    adjoint = adjoint_action(alg)
    assert not detect_splitting(adjoint, center_of(alg))


def test_composition_series_of_gl2():
    """Test the factors of gl(2) = center ⊕ sl(2)."""
    alg, _ = build_gl(2, 0)
    series = composition_series(adjoint_action(alg))
    assert [factor.dim for factor in series.factors] == [1, 3]
    assert [factor.weight for factor in series.factors] == [Weight.make([0, 0]), Weight.make([1, -1])]
    assert all(factor.certified for factor in series.factors)
    assert [sub.dim for sub in series.filtration] == [0, 1, 4]


def test_composition_report_of_simple_module():
    """Test a report with a single certified factor and no splitting flags."""
    _, action = build_gl(2, 1)
    report = composition_report(action)
    assert report.dim == 3
    assert len(report.highest) == 1
    assert report.highest[0].coords == {"e1": "1"}
    assert [factor.dim for factor in report.factors] == [3]
    assert report.splitness == []
    assert report.notes == []


def test_composition_report_flags():
    """Test splitness flags for split and nonsplit two-step filtrations."""
    alg, _ = build_gl(2, 0)
    split = composition_report(adjoint_action(alg))
    assert [flag.split for flag in split.splitness] == [True, True]
    alg, _ = build_gl(1, 1)
    nonsplit = composition_report(adjoint_action(alg))
    assert sum(factor.dim for factor in nonsplit.factors) == 4
    assert nonsplit.factors[0].weight == WeightModel.from_weight(Weight.make([0], [0]))
    assert nonsplit.splitness[0].kind == "adjacent"
    assert not nonsplit.splitness[0].split


def test_composition_report_without_splitting():
    """Test that splitting analysis can be skipped."""
    alg, _ = build_gl(2, 0)
    report = composition_report(adjoint_action(alg), analyze_splitting=False)
    assert report.splitness == []
    assert sum(count.count for count in report.weight_multiplicities) == 4


def test_spe_order_one_module_is_dual_standard():
    """Test that H^{1,2} of spe(2) is a single factor of weight e1."""
    cohomology = spencer_cohomology(cartan_prolong(spe_pair(2)), 1)
    report = composition_report(cohomology.module())
    assert [factor.dim for factor in report.factors] == [4]
    assert report.factors[0].weight == WeightModel.from_weight(Weight.make([1, 0]))
    assert report.factors[0].certified


def test_eigenvalues_are_fractions():
    """Test that eigenvalues come back as Fractions."""
    values = rational_eigenvalues(SparseMatrix.from_dense([["1/2", 0], [0, 2]]))
    assert values == [Fraction(1, 2), Fraction(2)]


def test_label_eigenvalues_of_adjoint():
    """Test the torus eigenvalues read off the weights of gl(2)."""
    alg, _ = build_gl(2, 0)
    values = label_eigenvalues(adjoint_action(alg))
    assert values[Weight.make([1, -1])] == (1, -1)
    assert values[Weight.make([0, 0])] == (0, 0)


def test_label_eigenvalues_reject_wrong_labels():
    """Test that a module whose basis labels misstate the torus weights is rejected."""
    alg, action = build_gl(2, 0)
    mislabeled = SuperSpace(
        [BasisVector("e1", 0, Weight.make([1, 0])), BasisVector("e2", 0, Weight.make([1, 0]))]
    )
    with pytest.raises(InvariantViolationError):
        label_eigenvalues(ModuleAction(alg, mislabeled, action.matrices))
    with pytest.raises(InvariantViolationError):
        composition_report(ModuleAction(alg, mislabeled, action.matrices))


def test_report_weights_modulo_trace():
    """Test that a trace frame writes gl(2)-weights with last coordinate 0."""
    _, action = build_gl(2, 0)
    report = composition_report(action.dual(), frame=WeightFrame(trace_eps=True))
    assert report.factors[0].weight == WeightModel.from_weight(Weight.make([1, 0]))
    assert report.highest[0].weight == WeightModel.from_weight(Weight.make([1, 0]))
    shown = {str(count.weight.to_weight()): count.count for count in report.weight_multiplicities}
    assert shown == {"e1": 1, "-e1": 1}
    assert report.weight_frame == "e-part modulo the trace"


def test_queer_order_one_is_one_certified_factor():
    """Test H^{1,2} of q:3:1:+ as a single irreducible of weight e1-d2 with a (1|1) top."""
    cohomology = spencer_cohomology(cartan_prolong(q_grading(3, 1, "+"), 2), 1)
    report = composition_report(cohomology.module())
    assert report.dim == 4
    assert [factor.dim for factor in report.factors] == [4]
    assert report.factors[0].weight == WeightModel.from_weight(Weight.make([1], [0, -1]))
    assert report.factors[0].certified
    assert report.notes == []
    shown = {str(count.weight.to_weight()): count.count for count in report.weight_multiplicities}
    assert shown == {"e1-d2": 2, "e1-d1": 2}
    assert "e1+d1-2d2" not in shown
    assert sorted(hv.parity for hv in report.highest) == ["even", "odd"]


def test_factors_of_a_trivial_module_are_certified():
    """Test that a two-dimensional highest-vector block splits into certified lines."""
    alg, action = build_gl(2, 0)
    zero = Weight.make([0, 0])
    space = SuperSpace([BasisVector("u", 0, zero), BasisVector("v", 0, zero)])
    trivial = ModuleAction(alg, space, [SparseMatrix.zero(2, 2) for _ in action.matrices])
    series = composition_series(trivial)
    assert [factor.dim for factor in series.factors] == [1, 1]
    assert all(factor.certified for factor in series.factors)
