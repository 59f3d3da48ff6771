"""Super spaces, Lie superalgebras, their modules and the classical families."""
from superspencer.superalg.action import (
    ModuleAction,
    adjoint_action,
    check_invariant_form,
    trivial_action,
)
from superspencer.superalg.algebra import IdentityViolation, LieSuperalgebra, check_jacobi
from superspencer.superalg.families import (
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
)
from superspencer.superalg.matrices import matrix_algebra, matrix_module, standard_action
from superspencer.superalg.powers import (
    EXTERIOR,
    SYMMETRIC,
    PowerSpace,
    normalize_word,
    power_action,
    super_ext_power,
    super_sym_power,
)
from superspencer.superalg.space import BasisVector, SuperSpace, dual_space, tensor_space
from superspencer.superalg.weights import Parity, Weight, WeightFrame

__all__ = [
    "BasisVector",
    "EXTERIOR",
    "IdentityViolation",
    "LieSuperalgebra",
    "ModuleAction",
    "Parity",
    "PowerSpace",
    "SYMMETRIC",
    "SuperSpace",
    "Weight",
    "WeightFrame",
    "adjoint_action",
    "build_cpe",
    "build_gl",
    "build_osp",
    "build_pe",
    "build_pe_extension",
    "build_psl",
    "build_psq",
    "build_q",
    "build_q_family",
    "build_sl",
    "build_spe",
    "check_invariant_form",
    "check_jacobi",
    "dual_space",
    "matrix_algebra",
    "matrix_module",
    "normalize_word",
    "power_action",
    "standard_action",
    "super_ext_power",
    "super_sym_power",
    "tensor_space",
    "trivial_action",
]
