"""Tests for super spaces, Lie superalgebras, modules and the matrix families."""
import pytest

from superspencer.exactlin import SparseMatrix, Subspace, make_vector
from superspencer.exceptions import (
    DimensionMismatchError,
    InvalidParameterError,
    InvariantViolationError,
    NotInvariantError,
)
from superspencer.superalg import (
    EXTERIOR,
    SYMMETRIC,
    BasisVector,
    LieSuperalgebra,
    Parity,
    PowerSpace,
    SuperSpace,
    Weight,
    WeightFrame,
    adjoint_action,
    build_cpe,
    build_gl,
    build_osp,
    build_pe,
    build_pe_extension,
    build_psl,
    build_psq,
    build_q,
    build_q_family,
    build_sl,
    build_spe,
    check_invariant_form,
    check_jacobi,
    dual_space,
    normalize_word,
    power_action,
    standard_action,
    tensor_space,
)
from superspencer.superalg.families import osp_form, pe_form
from superspencer.superalg.powers import embedding_matrix, projection_matrix


def odd_space(n: int) -> SuperSpace:
    return SuperSpace(
        [BasisVector(f"f{i}", Parity.ODD, Weight.unit("delta", i, 0, n)) for i in range(1, n + 1)]
    )


def test_weight_arithmetic_and_text():
    """Test weight sums, ordering and rendering."""
    a = Weight.make([2, 2])
    b = Weight.make([1, 0])
    assert str(a) == "2e1+2e2"
    assert str(Weight.make([1], [0, -1])) == "e1-d2"
    assert str(Weight.zero(2, 1)) == "0"
    assert str(Weight.make(["1/2"])) == "1/2e1"
    assert a - b == Weight.make([1, 2])
    assert a > b
    assert b.is_positive() and not (-b).is_positive()
    assert Weight.from_dict(a.to_dict()) == a


def test_weight_rank_mismatch():
    """Test that weights of different ranks cannot be added."""
    with pytest.raises(DimensionMismatchError):
        Weight.make([1]) + Weight.make([1, 0])


def test_weight_frame_modulo_trace():
    """Test that a trace frame shifts the e-part to end in 0."""
    frame = WeightFrame(trace_eps=True)
    assert frame.apply(Weight.make([2, -1, -1])) == Weight.make([3, 0, 0])
    assert frame.apply(Weight.make([2, 2, 0])) == Weight.make([2, 2, 0])
    assert frame.apply(Weight.make([1, 1], [2])) == Weight.make([0, 0], [2])
    assert WeightFrame().is_identity and not frame.is_identity


def test_weight_frame_drops_grading_coordinate():
    """Test that a dropped e-coordinate disappears from the weight."""
    frame = WeightFrame(drop_eps=(2,))
    assert frame.apply(Weight.make([-1, 2], [1])) == Weight.make([-1], [1])
    assert frame.describe() == "without e2"
    with pytest.raises(DimensionMismatchError):
        WeightFrame(drop_eps=(3,)).apply(Weight.make([1, 0]))


def test_super_space_basics():
    """Test superdimension, lookup and duplicate detection."""
    space = build_gl(2, 1)[0].standard
    assert space.superdim == (2, 1)
    assert space.index("f1") == 2
    assert dual_space(space).weight(0) == -space.weight(0)
    assert tensor_space(space, space).superdim == (5, 4)
    with pytest.raises(InvalidParameterError):
        SuperSpace([BasisVector("x", 0, Weight.make([1])), BasisVector("x", 1, Weight.make([1]))])


def test_normalize_word_signs():
    """Test Koszul signs when sorting products."""
    assert normalize_word((1, 0), [1, 1], SYMMETRIC) == (-1, (0, 1))
    assert normalize_word((1, 0), [1, 1], EXTERIOR) == (1, (0, 1))
    assert normalize_word((1, 0), [0, 0], EXTERIOR) == (-1, (0, 1))
    assert normalize_word((0, 0), [1], SYMMETRIC) is None
    assert normalize_word((0, 0), [0], EXTERIOR) is None
    assert normalize_word((0, 0), [1], EXTERIOR) == (1, (0, 0))


def test_power_dimensions():
    """Test dimensions of super-symmetric and super-exterior powers."""
    v = odd_space(2)
    assert PowerSpace(v, 2, EXTERIOR).superdim == (3, 0)
    assert PowerSpace(v, 2, SYMMETRIC).dim == 1
    assert PowerSpace(odd_space(3), 3, EXTERIOR).dim == 10
    mixed = build_gl(2, 2)[0].standard
    assert PowerSpace(mixed, 2, SYMMETRIC).superdim == (3 + 1, 4)
    assert PowerSpace(mixed, 2, EXTERIOR).superdim == (1 + 3, 4)
    assert PowerSpace(mixed, 0, EXTERIOR).dim == 1


def test_power_projection_inverts_embedding():
    """Test that projecting the symmetrized tensor returns the monomial."""
    mixed = build_gl(1, 2)[0].standard
    for kind in (SYMMETRIC, EXTERIOR):
        power = PowerSpace(mixed, 3, kind)
        assert projection_matrix(power) @ embedding_matrix(power) == SparseMatrix.identity(power.dim)


def test_power_rejects_bad_arguments():
    """Test that negative degrees and unknown kinds are rejected."""
    with pytest.raises(InvalidParameterError):
        PowerSpace(odd_space(2), -1, SYMMETRIC)
    with pytest.raises(InvalidParameterError):
        PowerSpace(odd_space(2), 2, "wedge")


@pytest.mark.parametrize(
    "build, superdim",
    [
        (lambda: build_gl(1, 1)[0], (2, 2)),
        (lambda: build_gl(2, 3)[0], (13, 12)),
        (lambda: build_sl(2, 1), (4, 4)),
        (lambda: build_psl(2, 2), (6, 8)),
        (lambda: build_spe(3)[0], (8, 9)),
        (lambda: build_pe(3)[0], (9, 9)),
        (lambda: build_cpe(2)[0], (5, 4)),
        (lambda: build_q(2)[0], (4, 4)),
        (lambda: build_psq(3), (8, 8)),
        (lambda: build_osp(4, 2), (9, 8)),
        (lambda: build_osp(5, 2), (13, 10)),
    ],
)
def test_family_superdims(build, superdim):
    """Test superdimensions of the classical families."""
    assert build().superdim == superdim


@pytest.mark.parametrize(
    "build",
    [
        lambda: build_sl(2, 1),
        lambda: build_psl(2, 2),
        lambda: build_spe(2)[0],
        lambda: build_pe(2)[0],
        lambda: build_pe_extension(2, 1, 2)[0],
        lambda: build_q(2)[0],
        lambda: build_osp(3, 2),
    ],
)
def test_family_jacobi(build):
    """Test super antisymmetry and the super Jacobi identity."""
    assert check_jacobi(build()) is None


def test_osp_grading_closes():
    """Test that the osp grading is compatible with the bracket and has depth one."""
    alg = build_osp(4, 2)
    assert check_jacobi(alg) is None
    assert alg.component_dims() == {-1: 4, 0: 9, 1: 4}


def test_check_jacobi_detects_broken_constants():
    """Test that a corrupted structure constant is reported."""
    alg = build_sl(2, 1)
    structure = dict(alg.structure)
    key = next(iter(sorted(structure)))
    structure[key] = {k: v * 2 for k, v in structure[key].items()}
    broken = LieSuperalgebra("broken", alg.space, structure)
    assert check_jacobi(broken) is not None


@pytest.mark.parametrize(
    "realization",
    [
        lambda: build_gl(2, 1),
        lambda: build_spe(2),
        lambda: build_q(2),
        lambda: build_q_family(3, 1, 1),
        lambda: build_q_family(3, 1, -1),
    ],
)
def test_realizations_are_representations(realization):
    """Test the representation identity on standard modules."""
    _, action = realization()
    assert action.check_representation() is None


def test_dual_tensor_and_powers_are_representations():
    """Test that derived modules satisfy the representation identity."""
    _, action = build_spe(2)
    assert action.dual().check_representation() is None
    assert action.tensor(action.dual()).check_representation() is None
    assert power_action(action.dual(), 2, EXTERIOR).check_representation() is None
    assert power_action(action, 2, SYMMETRIC).check_representation() is None


def test_adjoint_is_representation():
    """Test that the adjoint action of a superalgebra is a representation."""
    assert adjoint_action(build_sl(2, 1)).check_representation() is None


def test_invariant_forms():
    """Test that pe preserves the odd form and osp the even one."""
    _, action = build_pe(2)
    assert check_invariant_form(action, pe_form(2)) is None
    osp = build_osp(3, 2)
    assert check_invariant_form(standard_action(osp), osp_form(3, 1)) is None


def test_faithfulness(pe2):
    """Test the kernel of standard and trivial-center actions."""
    _, action = pe2
    assert action.is_faithful()
    alg, _ = build_gl(2, 0)
    assert adjoint_action(alg).kernel().dim == 1


def test_subalgebra_must_close():
    """Test that a non-closed span is rejected as a subalgebra."""
    alg = build_sl(2, 1)
    indices = [alg.space.index("E[e1,f1]"), alg.space.index("E[f1,e1]")]
    with pytest.raises(InvariantViolationError):
        alg.subalgebra(indices, "not closed")


def test_restrict_and_quotient():
    """Test restriction to an invariant subspace and the quotient module."""
    alg, _ = build_gl(2, 0)
    adjoint = adjoint_action(alg)
    center = Subspace.from_vectors(
        4, [make_vector({alg.space.index("E[e1,e1]"): 1, alg.space.index("E[e2,e2]"): 1})]
    )
    assert adjoint.is_invariant(center)
    assert adjoint.restrict(center).dim == 1
    quotient = adjoint.quotient(center)
    assert quotient.dim == 3
    assert quotient.check_representation() is None


def test_restrict_rejects_non_invariant():
    """Test that restricting to a non-invariant line raises."""
    alg = build_sl(2, 1)
    action = standard_action(alg)
    line = Subspace.from_vectors(3, [make_vector({1: 1})])
    with pytest.raises(NotInvariantError):
        action.restrict(line)
    with pytest.raises(NotInvariantError):
        action.quotient(line)


def test_document_round_trip():
    """Test that structure constants survive the JSON document form."""
    alg = build_spe(2)[0]
    rebuilt = LieSuperalgebra.from_document(alg.to_document())
    assert rebuilt.structure == alg.structure
    assert rebuilt.space == alg.space


def test_family_parameter_errors():
    """Test that out-of-range family parameters raise."""
    with pytest.raises(InvalidParameterError):
        build_spe(1)
    with pytest.raises(InvalidParameterError):
        build_psl(2, 3)
    with pytest.raises(InvalidParameterError):
        build_pe_extension(2, 0, 0)
    with pytest.raises(InvalidParameterError):
        build_q_family(3, 3)
    with pytest.raises(InvalidParameterError):
        build_osp(4, 3)


def test_pe_extension_element():
    """Test that spe(n) extended by tau is pe(n) up to the element name."""
    ext, _ = build_pe_extension(2, 1, 0)
    pe, _ = build_pe(2)
    assert ext.superdim == pe.superdim
    assert ext.name == "spe(2)+<1tau+0z>"
