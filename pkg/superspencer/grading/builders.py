"""Builders for the depth-one gradings and their reference algebras."""
import logging
from fractions import Fraction
from typing import List, Tuple

from superspencer.exceptions import InvalidParameterError
from superspencer.grading.pair import GradedPair, ReferenceGrading
from superspencer.superalg import (
    build_cpe,
    build_osp,
    build_pe,
    build_pe_extension,
    build_q_family,
    build_spe,
    matrix_algebra,
    matrix_module,
)
from superspencer.superalg.weights import WeightFrame
from superspencer.superalg.families import identity_on, sl_elements, split_standard
from superspencer.superalg.matrices import Element, unit_matrix
from superspencer.superalg.space import BasisVector, SuperSpace

logger = logging.getLogger(__name__)


# --- periplectic pairs -----------------------------------------------------

# gl(n)-weights of the periplectic family are written modulo the trace
PE_FRAME = WeightFrame(trace_eps=True)


def pe_pair(n: int) -> GradedPair:
    g0, action = build_pe(n)
    return GradedPair(f"pe:{n}", g0, action, (g0.space.index("tau"),), PE_FRAME)


def spe_pair(n: int) -> GradedPair:
    g0, action = build_spe(n)
    return GradedPair(f"spe:{n}", g0, action, (), PE_FRAME)


def cpe_pair(n: int) -> GradedPair:
    g0, action = build_cpe(n)
    radical = (g0.space.index("tau"), g0.space.index("z"))
    return GradedPair(f"cpe:{n}", g0, action, radical, PE_FRAME)


def pe_extension_pair(n: int, a, b) -> GradedPair:
    g0, action = build_pe_extension(n, a, b)
    a, b = Fraction(a), Fraction(b)
    return GradedPair(f"pe-ext:{n}:{a}:{b}", g0, action, (g0.space.index("ext"),), PE_FRAME)


def pe_grading_tower(n: int) -> Tuple[ReferenceGrading, ReferenceGrading]:
    """
    Z-gradings of pe(n+1) and spe(n+1) by the last diagonal element.

    The degree of a basis element is its ε_{n+1}-coefficient, so the components
    are g_{-1} = (n|n), g_1 = (n|n) and g_2 = (0|1).

    Args:
        n: Rank of the degree-zero periplectic part, n ≥ 2

    Returns:
        (grading of pe(n+1), grading of spe(n+1))
    """
    if n < 2:
        raise InvalidParameterError(f"pe grading tower needs n ≥ 2, got {n}")
    gradings = []
    for builder in (build_pe, build_spe):
        alg, _ = builder(n + 1)
        degrees = [int(b.weight.eps[n]) for b in alg.space.basis]
        gradings.append(ReferenceGrading(f"{alg.name} graded", alg.with_grading(degrees)))
    logger.info(f"Built pe({n + 1}) and spe({n + 1}) reference gradings")
    return gradings[0], gradings[1]


# --- sl gradings -----------------------------------------------------------


def _center_element(
    space: SuperSpace, primed: List[int], rest: List[int], m: int, n: int
) -> Tuple[Element, bool]:
    """
    The block-diagonal element completing sl(V') ⊕ sl(U) to s(gl(V') ⊕ gl(U)).

    Returns:
        (element, True when it is a recorded central generator)
    """
    size = space.dim
    sdim_primed = sum(-1 if space.parity(i) else 1 for i in primed)
    sdim_rest = sum(-1 if space.parity(i) else 1 for i in rest)
    if m != n:
        a = Fraction(-sdim_rest, m - n)
        b = a + 1
        inside = (a == 0 or sdim_primed == 0) and (b == 0 or sdim_rest == 0)
        if not inside:
            z = identity_on(size, primed, a).combine(identity_on(size, rest, b))
            return ("z", z), True
    elif sdim_primed != 0:
        return ("z", identity_on(size, primed + rest)), True
    v, u = primed[0], rest[0]
    sign = -1 if (space.parity(v) + space.parity(u)) & 1 else 1
    w = unit_matrix(size, v, v).combine(unit_matrix(size, u, u), -sign)
    return ("w", w), False


def sl_depth1_grading(m: int, n: int, p: int, q: int) -> GradedPair:
    """
    Depth-one grading of sl(m|n) by V = V' ⊕ U with V' = (m−p|q).

    g_0 = c(sl(V') ⊕ sl(U)) acts on g_{-1} = Hom(V', U). The center element acts
    as the identity on g_{-1} when m ≠ n; for m = n it is the identity matrix,
    which acts trivially.

    Raises:
        InvalidParameterError: for parameters out of range or an empty V' or U
    """
    if not (0 <= p <= m and 0 <= q <= n):
        raise InvalidParameterError(f"sl-d1 needs 0 ≤ p ≤ m and 0 ≤ q ≤ n, got {(m, n, p, q)}")
    if m - p + q == 0 or p + n - q == 0:
        raise InvalidParameterError(f"sl-d1 parameters {(m, n, p, q)} leave an empty factor")
    space, primed, rest = split_standard(m, n, p, q)
    elements = sl_elements(space, primed) + sl_elements(space, rest)
    extra, central = _center_element(space, primed, rest, m, n)
    elements.append(extra)
    g0 = matrix_algebra(f"c(sl({m - p}|{q})+sl({p}|{n - q}))", space, elements)

    module_basis = []
    module_matrices = []
    for u in rest:
        for v in primed:
            module_basis.append(
                BasisVector(
                    f"E[{space.label(u)},{space.label(v)}]",
                    (space.parity(u) + space.parity(v)) & 1,
                    space.weight(u) - space.weight(v),
                )
            )
            module_matrices.append(unit_matrix(space.dim, u, v))
    module = SuperSpace(module_basis, space.ranks)
    action = matrix_module(g0, module, module_matrices)
    radical = (len(elements) - 1,) if central else ()
    return GradedPair(f"sl-d1:{m}:{n}:{p}:{q}", g0, action, radical)


def sl_standard_grading(m: int, n: int) -> GradedPair:
    """Standard grading of sl(m|n): g_{-1} = U ⊗ V* with V even, U odd."""
    if m < 1 or n < 1:
        raise InvalidParameterError(f"sl-std needs m, n ≥ 1, got ({m}, {n})")
    pair = sl_depth1_grading(m, n, 0, 0)
    pair.label = f"sl-std:{m}:{n}"
    return pair


def sl_reference_grading(m: int, n: int, p: int, q: int) -> ReferenceGrading:
    """sl(m|n) on V' ⊕ U, graded by the sum of the ε-coordinates of a weight."""
    if not (0 <= p <= m and 0 <= q <= n) or m - p + q == 0 or p + n - q == 0:
        raise InvalidParameterError(f"Invalid sl grading parameters {(m, n, p, q)}")
    space, _, _ = split_standard(m, n, p, q)
    alg = matrix_algebra(f"sl({m}|{n})", space, sl_elements(space, range(space.dim)))
    degrees = [int(sum(b.weight.eps)) for b in alg.space.basis]
    return ReferenceGrading(f"sl({m}|{n}) graded {p}:{q}", alg.with_grading(degrees))


# --- queer and orthosymplectic ---------------------------------------------


def q_grading(n: int, p: int, sign: str = "+") -> GradedPair:
    """Pair (g_{-1}, ps(q(p) ⊕ q(n−p))) with g_{-1} the summand picked by sign."""
    if sign not in ("+", "-"):
        raise InvalidParameterError(f"q grading sign must be '+' or '-', got '{sign}'")
    g0, action = build_q_family(n, p, 1 if sign == "+" else -1)
    return GradedPair(f"q:{n}:{p}:{sign}", g0, action, None)


def osp_reference_grading(m: int, n2: int) -> ReferenceGrading:
    alg = build_osp(m, n2)
    return ReferenceGrading(f"{alg.name} graded", alg)


def osp_grading(m: int, n2: int) -> GradedPair:
    """
    Pair (g_{-1}, c osp(m−2|2n)) from the grading of osp(m|2n).

    The grading element E_{bb} − E_{aa} of the last hyperbolic pair (a, b) is
    the center z; it acts as the identity on g_{-1}. Report weights leave out
    its coordinate ε_r, which equals the order k on a whole Spencer row, so
    they are written for the torus of o(m−2) ⊕ sp(2n).
    """
    full = build_osp(m, n2)
    standard = full.standard
    r = m // 2
    a, b = r - 1, 2 * r - 1
    h = identity_on(standard.dim, [a]).combine(identity_on(standard.dim, [b]), -1)
    elements: List[Element] = []
    for i in full.component(0):
        matrix = full.matrices[i]
        if matrix == h:
            elements.append(("z", h.scale(-1)))
        else:
            elements.append((full.space.label(i), matrix))
    g0 = matrix_algebra(f"c osp({m - 2}|{n2})", standard, elements)
    minus = full.component(-1)
    module = full.space.subset(minus)
    action = matrix_module(g0, module, [full.matrices[i] for i in minus])
    return GradedPair(
        f"osp:{m}:{n2}", g0, action, (g0.space.index("z"),), WeightFrame(drop_eps=(r,))
    )
