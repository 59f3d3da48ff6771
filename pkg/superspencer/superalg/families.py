"""Constructors for the matrix Lie superalgebra families.

Every builder realizes its algebra by explicit matrices on a standard space
whose basis lists even vectors before odd ones, unless a split into two
subspaces is requested (``split_standard``).
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from superspencer.exactlin import SparseMatrix, Vector, block_kernel, to_scalar
from superspencer.exceptions import InvalidParameterError
from superspencer.superalg.action import ModuleAction
from superspencer.superalg.algebra import LieSuperalgebra
from superspencer.superalg.matrices import (
    Element,
    flatten,
    matrix_algebra,
    matrix_module,
    standard_action,
    unit_matrix,
)
from superspencer.superalg.space import BasisVector, SuperSpace
from superspencer.superalg.weights import Parity, Weight

logger = logging.getLogger(__name__)

Realization = Tuple[LieSuperalgebra, ModuleAction]


# --- standard spaces -------------------------------------------------------


def gl_standard(m: int, n: int) -> SuperSpace:
    """e_1..e_m of weights ε_i, then f_1..f_n of weights δ_j."""
    basis = [BasisVector(f"e{i}", Parity.EVEN, Weight.unit("eps", i, m, n)) for i in range(1, m + 1)]
    basis += [BasisVector(f"f{j}", Parity.ODD, Weight.unit("delta", j, m, n)) for j in range(1, n + 1)]
    return SuperSpace(basis, (m, n))


def split_standard(m: int, n: int, p: int, q: int) -> Tuple[SuperSpace, List[int], List[int]]:
    """
    Standard space of gl(m|n) listed as V' ⊕ U.

    V' = ⟨e_1..e_{m−p}, f_1..f_q⟩ carries the weights ε, U = ⟨e_{m−p+1}..e_m,
    f_{q+1}..f_n⟩ the weights δ.

    Returns:
        The space and the index lists of V' and U
    """
    primed = [(f"e{i}", Parity.EVEN) for i in range(1, m - p + 1)]
    primed += [(f"f{j}", Parity.ODD) for j in range(1, q + 1)]
    rest = [(f"e{i}", Parity.EVEN) for i in range(m - p + 1, m + 1)]
    rest += [(f"f{j}", Parity.ODD) for j in range(q + 1, n + 1)]
    eps_rank, delta_rank = len(primed), len(rest)
    basis = [
        BasisVector(label, parity, Weight.unit("eps", i, eps_rank, delta_rank))
        for i, (label, parity) in enumerate(primed, start=1)
    ]
    basis += [
        BasisVector(label, parity, Weight.unit("delta", j, eps_rank, delta_rank))
        for j, (label, parity) in enumerate(rest, start=1)
    ]
    space = SuperSpace(basis, (eps_rank, delta_rank))
    return space, list(range(eps_rank)), list(range(eps_rank, eps_rank + delta_rank))


def pe_standard(n: int) -> SuperSpace:
    """e_i even of weight ε_i, f_i odd of weight −ε_i."""
    basis = [BasisVector(f"e{i}", Parity.EVEN, Weight.unit("eps", i, n, 0)) for i in range(1, n + 1)]
    basis += [BasisVector(f"f{i}", Parity.ODD, Weight.unit("eps", i, n, 0, -1)) for i in range(1, n + 1)]
    return SuperSpace(basis, (n, 0))


def pe_form(n: int) -> Dict[Tuple[int, int], int]:
    """Gram entries of the odd form P = antidiag(1_n, 1_n)."""
    form = {}
    for i in range(n):
        form[(i, n + i)] = 1
        form[(n + i, i)] = 1
    return form


def q_standard(n: int, p: Optional[int] = None) -> SuperSpace:
    """e_i even and f_i odd, both of weight ε_i for i ≤ p and δ_{i−p} otherwise."""
    p = n if p is None else p
    def weight(i: int) -> Weight:
        if i <= p:
            return Weight.unit("eps", i, p, n - p)
        return Weight.unit("delta", i - p, p, n - p)
    basis = [BasisVector(f"e{i}", Parity.EVEN, weight(i)) for i in range(1, n + 1)]
    basis += [BasisVector(f"f{i}", Parity.ODD, weight(i)) for i in range(1, n + 1)]
    return SuperSpace(basis, (p, n - p))


def osp_standard(m: int, n: int) -> SuperSpace:
    """Split basis a_i, b_i (±ε_i), c (0, m odd), f_j, g_j (±δ_j)."""
    r = m // 2
    basis = [BasisVector(f"a{i}", Parity.EVEN, Weight.unit("eps", i, r, n)) for i in range(1, r + 1)]
    basis += [BasisVector(f"b{i}", Parity.EVEN, Weight.unit("eps", i, r, n, -1)) for i in range(1, r + 1)]
    if m % 2:
        basis.append(BasisVector("c", Parity.EVEN, Weight.zero(r, n)))
    basis += [BasisVector(f"f{j}", Parity.ODD, Weight.unit("delta", j, r, n)) for j in range(1, n + 1)]
    basis += [BasisVector(f"g{j}", Parity.ODD, Weight.unit("delta", j, r, n, -1)) for j in range(1, n + 1)]
    return SuperSpace(basis, (r, n))


def osp_form(m: int, n: int) -> Dict[Tuple[int, int], int]:
    """Even supersymmetric form: symmetric on the a/b/c part, symplectic on f/g."""
    r = m // 2
    form = {}
    for i in range(r):
        form[(i, r + i)] = 1
        form[(r + i, i)] = 1
    odd_start = 2 * r
    if m % 2:
        form[(odd_start, odd_start)] = 1
        odd_start += 1
    for j in range(n):
        form[(odd_start + j, odd_start + n + j)] = 1
        form[(odd_start + n + j, odd_start + j)] = -1
    return form


# --- gl / sl / psl ---------------------------------------------------------


def _label(space: SuperSpace, prefix: str, r: int, c: int) -> str:
    return f"{prefix}[{space.label(r)},{space.label(c)}]"


def sl_elements(space: SuperSpace, indices: Sequence[int]) -> List[Element]:
    """Basis of the supertraceless matrices on the span of the given basis vectors.

    Off-diagonal units come first (row-major), then h_k = E_kk − (−1)^{p_k+p_{k+1}} E_{k+1,k+1}.
    """
    n = space.dim
    elements: List[Element] = []
    for r in indices:
        for c in indices:
            if r != c:
                elements.append((_label(space, "E", r, c), unit_matrix(n, r, c)))
    for k, l in zip(indices, indices[1:]):
        sign = -1 if (space.parity(k) + space.parity(l)) & 1 else 1
        h = SparseMatrix(n, n, {k: {k: 1}, l: {l: -sign}})
        elements.append((_label(space, "h", k, l), h))
    return elements


def identity_on(n: int, indices: Sequence[int], coef=1) -> SparseMatrix:
    return SparseMatrix(n, n, {i: {i: coef} for i in indices})


def build_gl(m: int, n: int) -> Realization:
    if m + n < 1:
        raise InvalidParameterError("gl(m|n) needs m + n ≥ 1")
    space = gl_standard(m, n)
    elements = [
        (_label(space, "E", r, c), unit_matrix(space.dim, r, c))
        for r in range(space.dim)
        for c in range(space.dim)
    ]
    alg = matrix_algebra(f"gl({m}|{n})", space, elements)
    return alg, standard_action(alg)


def build_sl(m: int, n: int) -> LieSuperalgebra:
    if m + n < 2:
        raise InvalidParameterError("sl(m|n) needs m + n ≥ 2")
    space = gl_standard(m, n)
    return matrix_algebra(f"sl({m}|{n})", space, sl_elements(space, range(space.dim)))


def build_psl(m: int, n: int) -> LieSuperalgebra:
    """sl(n|n)/⟨1_{2n}⟩, with the last Cartan element traded for the identity."""
    if m != n:
        raise InvalidParameterError(f"psl requires m == n, got ({m}|{n})")
    if n < 2:
        raise InvalidParameterError("psl(n|n) needs n ≥ 2")
    space = gl_standard(n, n)
    elements = sl_elements(space, range(space.dim))[:-1]
    return matrix_algebra(
        f"psl({n}|{n})", space, elements, central=identity_on(space.dim, range(space.dim))
    )


# --- periplectic family ----------------------------------------------------


def _spe_elements(n: int, space: SuperSpace) -> List[Element]:
    size = 2 * n
    elements: List[Element] = []
    for i in range(n):
        for j in range(n):
            if i != j:
                a = SparseMatrix(size, size, {i: {j: 1}, n + j: {n + i: -1}})
                elements.append((f"A[{i + 1},{j + 1}]", a))
    for i in range(n - 1):
        h = SparseMatrix(size, size, {i: {i: 1}, n + i: {n + i: -1}, i + 1: {i + 1: -1}, n + i + 1: {n + i + 1: 1}})
        elements.append((f"H{i + 1}", h))
    for i in range(n):
        for j in range(i, n):
            if i == j:
                b = SparseMatrix(size, size, {i: {n + i: 1}})
            else:
                b = SparseMatrix(size, size, {i: {n + j: 1}, j: {n + i: 1}})
            elements.append((f"B[{i + 1},{j + 1}]", b))
    for i in range(n):
        for j in range(i + 1, n):
            c = SparseMatrix(size, size, {n + i: {j: 1}, n + j: {i: -1}})
            elements.append((f"C[{i + 1},{j + 1}]", c))
    return elements


def tau_matrix(n: int) -> SparseMatrix:
    """τ = diag(1_n, −1_n)."""
    return SparseMatrix(2 * n, 2 * n, {i: {i: 1 if i < n else -1} for i in range(2 * n)})


def _check_pe_size(n: int) -> None:
    if n < 2:
        raise InvalidParameterError(f"Periplectic family needs n ≥ 2, got {n}")


def build_spe(n: int) -> Realization:
    _check_pe_size(n)
    space = pe_standard(n)
    alg = matrix_algebra(f"spe({n})", space, _spe_elements(n, space))
    return alg, standard_action(alg)


def build_pe(n: int) -> Realization:
    """pe(n) = spe(n) ⋉ ⟨τ⟩."""
    _check_pe_size(n)
    space = pe_standard(n)
    elements = _spe_elements(n, space) + [("tau", tau_matrix(n))]
    alg = matrix_algebra(f"pe({n})", space, elements)
    return alg, standard_action(alg)


def build_pe_extension(n: int, a, b) -> Realization:
    """spe(n) ⋉ ⟨aτ + bz⟩ with z the identity of V."""
    _check_pe_size(n)
    a, b = Fraction(a), Fraction(b)
    if a == 0 and b == 0:
        raise InvalidParameterError("Extension element aτ + bz must be nonzero")
    space = pe_standard(n)
    size = 2 * n
    element = tau_matrix(n).scale(to_scalar(a)).combine(identity_on(size, range(size)), to_scalar(b))
    elements = _spe_elements(n, space) + [("ext", element)]
    alg = matrix_algebra(f"spe({n})+<{_fraction_text(a)}tau+{_fraction_text(b)}z>", space, elements)
    return alg, standard_action(alg)


def build_cpe(n: int) -> Realization:
    """cpe(n) = pe(n) ⊕ ⟨z⟩."""
    _check_pe_size(n)
    space = pe_standard(n)
    size = 2 * n
    elements = _spe_elements(n, space) + [
        ("tau", tau_matrix(n)),
        ("z", identity_on(size, range(size))),
    ]
    alg = matrix_algebra(f"cpe({n})", space, elements)
    return alg, standard_action(alg)


def _fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


# --- queer family ----------------------------------------------------------


def _qa(size: int, n: int, i: int, j: int) -> SparseMatrix:
    return SparseMatrix(size, size, {i: {j: 1}, n + i: {n + j: 1}})


def _qb(size: int, n: int, i: int, j: int) -> SparseMatrix:
    return SparseMatrix(size, size, {i: {n + j: 1}, n + i: {j: 1}})


def j_matrix(n: int) -> SparseMatrix:
    """J with J e_i = −f_i and J f_i = e_i."""
    entries: Dict[int, Dict[int, int]] = {}
    for i in range(n):
        entries[i] = {n + i: 1}
        entries[n + i] = {i: -1}
    return SparseMatrix(2 * n, 2 * n, entries)


def build_q(n: int) -> Realization:
    """q(n): the matrices (A B; B A)."""
    if n < 1:
        raise InvalidParameterError("q(n) needs n ≥ 1")
    space = q_standard(n)
    size = 2 * n
    elements = [(f"QA[{i + 1},{j + 1}]", _qa(size, n, i, j)) for i in range(n) for j in range(n)]
    elements += [(f"QB[{i + 1},{j + 1}]", _qb(size, n, i, j)) for i in range(n) for j in range(n)]
    alg = matrix_algebra(f"q({n})", space, elements)
    return alg, standard_action(alg)


def build_psq(n: int) -> LieSuperalgebra:
    """psq(n): odd-traceless q(n) modulo the identity."""
    if n < 2:
        raise InvalidParameterError("psq(n) needs n ≥ 2")
    space = q_standard(n)
    size = 2 * n
    elements: List[Element] = []
    for kind, builder in (("QA", _qa), ("QB", _qb)):
        for i in range(n):
            for j in range(n):
                if i != j:
                    elements.append((f"{kind}[{i + 1},{j + 1}]", builder(size, n, i, j)))
        for i in range(n - 1):
            diff = builder(size, n, i, i).combine(builder(size, n, i + 1, i + 1), -1)
            elements.append((f"{kind}d{i + 1}", diff))
    return matrix_algebra(f"psq({n})", space, elements, central=identity_on(size, range(size)))


def build_q_family(n: int, p: int, sign: int = 1) -> Realization:
    """
    g0 = ps(q(p) ⊕ q(n−p)) and its action on one summand of Hom(V', U).

    Args:
        n: Size of q(n)
        p: Size of the first block, 1 ≤ p < n
        sign: +1 or −1, selecting the summand {X : JX = sign·(−1)^{p(X)} XJ}

    Returns:
        (g0, action of g0 on g_{-1})
    """
    if not 1 <= p < n:
        raise InvalidParameterError(f"q family needs 1 ≤ p < n, got n={n}, p={p}")
    if sign not in (1, -1):
        raise InvalidParameterError(f"Summand sign must be +1 or -1, got {sign}")
    space = q_standard(n, p)
    size = 2 * n
    blocks = [list(range(p)), list(range(p, n))]

    elements: List[Element] = []
    for kind, builder in (("QA", _qa), ("QB", _qb)):
        for block in blocks:
            for i in block:
                for j in block:
                    if i != j:
                        elements.append((f"{kind}[{i + 1},{j + 1}]", builder(size, n, i, j)))
        if kind == "QA":
            for block in blocks:
                for i, j in zip(block, block[1:]):
                    diff = builder(size, n, i, i).combine(builder(size, n, j, j), -1)
                    elements.append((f"QAd{i + 1}", diff))
            ones_u = [i for i in blocks[1]] + [n + i for i in blocks[1]]
            elements.append(("z", identity_on(size, ones_u)))
        else:
            for i in range(n - 1):
                diff = builder(size, n, i, i).combine(builder(size, n, i + 1, i + 1), -1)
                elements.append((f"QBd{i + 1}", diff))
    g0 = matrix_algebra(
        f"ps(q({p})+q({n - p}))", space, elements, central=identity_on(size, range(size))
    )

    primed = blocks[0] + [n + i for i in blocks[0]]
    rest = blocks[1] + [n + i for i in blocks[1]]
    j = j_matrix(n)
    sources = []
    columns: Dict[int, Vector] = {}
    for u in rest:
        for v in primed:
            unit = unit_matrix(size, u, v)
            parity = (space.parity(u) + space.parity(v)) & 1
            image = (j @ unit).combine(unit @ j, -sign * (-1 if parity else 1))
            index = u * size + v
            sources.append(index)
            columns[index] = flatten(image)
    rows, pivots = block_kernel(columns, sources)
    module_matrices = [_unflatten(row, size) for row in rows]
    module = SuperSpace(
        [
            BasisVector(
                f"Y[{space.label(pivot // size)},{space.label(pivot % size)}]",
                (space.parity(pivot // size) + space.parity(pivot % size)) & 1,
                space.weight(pivot // size) - space.weight(pivot % size),
            )
            for pivot in pivots
        ],
        space.ranks,
    )
    return g0, matrix_module(g0, module, module_matrices)


def _unflatten(vec: Vector, size: int) -> SparseMatrix:
    entries: Dict[int, Dict[int, object]] = {}
    for index, value in vec.items():
        entries.setdefault(index // size, {})[index % size] = value
    return SparseMatrix(size, size, entries)


# --- orthosymplectic -------------------------------------------------------


def form_algebra_elements(space: SuperSpace, form: Dict[Tuple[int, int], int]) -> List[Element]:
    """
    Basis of {X : B(Xu, v) + (−1)^{p(X)p(u)} B(u, Xv) = 0} for an even form B.

    Solved blockwise over the (parity, weight) blocks of gl(V).
    """
    size = space.dim
    gram: Dict[int, Dict[int, int]] = {}
    gram_t: Dict[int, Dict[int, int]] = {}
    for (a, b), value in form.items():
        gram.setdefault(a, {})[b] = value
        gram_t.setdefault(b, {})[a] = value

    blocks: Dict[Tuple[int, Weight], List[int]] = {}
    for r in range(size):
        for c in range(size):
            key = ((space.parity(r) + space.parity(c)) & 1, space.weight(r) - space.weight(c))
            blocks.setdefault(key, []).append(r * size + c)

    elements: List[Element] = []
    for (parity, _), sources in blocks.items():
        columns: Dict[int, Vector] = {}
        for index in sources:
            r, c = divmod(index, size)
            column: Dict[int, object] = {}
            for b, value in gram.get(r, {}).items():
                key = c * size + b
                column[key] = column.get(key, 0) + to_scalar(value)
            for a, value in gram_t.get(r, {}).items():
                sign = -1 if parity and space.parity(a) else 1
                key = a * size + c
                column[key] = column.get(key, 0) + to_scalar(sign * value)
            columns[index] = {k: v for k, v in column.items() if v}
        rows, pivots = block_kernel(columns, sources)
        for row, pivot in zip(rows, pivots):
            r, c = divmod(pivot, size)
            elements.append((_label(space, "X", r, c), _unflatten(row, size)))
    return elements


def build_osp(m: int, n2: int) -> LieSuperalgebra:
    """
    osp(m|2n) graded by the ε-coordinate of its last hyperbolic pair.

    Args:
        m: Dimension of the even part, m ≥ 3
        n2: Dimension of the odd part, even and ≥ 2

    Returns:
        The algebra with grading g_{-1} ⊕ g_0 ⊕ g_1
    """
    if m < 3 or n2 < 2 or n2 % 2:
        raise InvalidParameterError(f"osp(m|2n) needs m ≥ 3 and n ≥ 1, got ({m}|{n2})")
    n = n2 // 2
    space = osp_standard(m, n)
    elements = form_algebra_elements(space, osp_form(m, n))
    r = m // 2
    alg = matrix_algebra(f"osp({m}|{n2})", space, elements)
    grading = [int(w.eps[r - 1]) for w in (b.weight for b in alg.space.basis)]
    return alg.with_grading(grading)
