"""Super-symmetric and super-exterior powers with Koszul signs.

A power is spanned by monomials: nondecreasing index words. In S^s a repeated
odd index kills the monomial, in E^s a repeated even index does. Products use
the ½-convention, vw = (v⊗w + (−1)^{p(v)p(w)} w⊗v)/2, so the embedding into the
tensor power is the symmetrizer with weight 1/s!.
"""
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from superspencer.exactlin import Scalar, SparseMatrix, Vector, add_scaled, to_scalar
from superspencer.exceptions import InvalidParameterError
from superspencer.superalg.action import ModuleAction
from superspencer.superalg.space import BasisVector, SuperSpace
from superspencer.superalg.weights import Weight

SYMMETRIC = "sym"
EXTERIOR = "ext"

Word = Tuple[int, ...]


def _swap_sign(kind: str, a: int, b: int) -> int:
    """Sign picked up when two adjacent factors of parities a, b are exchanged."""
    sign = -1 if (a & 1) and (b & 1) else 1
    return sign if kind == SYMMETRIC else -sign


def normalize_word(word: Sequence[int], parities: Sequence[int], kind: str) -> Optional[Tuple[int, Word]]:
    """
    Sort a product of basis vectors into its monomial.

    Args:
        word: Indices of the factors, left to right
        parities: Parity of every index
        kind: SYMMETRIC or EXTERIOR

    Returns:
        (sign, monomial), or None when the product vanishes
    """
    letters = list(word)
    sign = 1
    # insertion sort, tracking one sign per adjacent exchange
    for i in range(1, len(letters)):
        j = i
        while j > 0 and letters[j - 1] > letters[j]:
            sign *= _swap_sign(kind, parities[letters[j - 1]], parities[letters[j]])
            letters[j - 1], letters[j] = letters[j], letters[j - 1]
            j -= 1
    killed = 1 if kind == SYMMETRIC else 0
    for a, b in zip(letters, letters[1:]):
        if a == b and (parities[a] & 1) == killed:
            return None
    return sign, tuple(letters)


class PowerSpace(SuperSpace):
    """S^s(V) or E^s(V) with its monomial basis in lexicographic order."""

    def __init__(self, base: SuperSpace, degree: int, kind: str):
        if degree < 0:
            raise InvalidParameterError(f"Power degree must be nonnegative, got {degree}")
        if kind not in (SYMMETRIC, EXTERIOR):
            raise InvalidParameterError(f"Unknown power kind '{kind}'")
        self.base = base
        self.degree = degree
        self.kind = kind
        parities = base.parities()
        killed = 1 if kind == SYMMETRIC else 0
        words: List[Word] = []
        for word in combinations_with_replacement(range(base.dim), degree):
            if any(a == b and parities[a] == killed for a, b in zip(word, word[1:])):
                continue
            words.append(word)
        self.words: Tuple[Word, ...] = tuple(words)
        self.word_index: Dict[Word, int] = {w: i for i, w in enumerate(words)}
        joiner = "·" if kind == SYMMETRIC else "∧"
        basis = []
        for word in words:
            weight = Weight.zero(*base.ranks)
            for letter in word:
                weight = weight + base.weight(letter)
            label = joiner.join(base.label(letter) for letter in word) if word else "1"
            basis.append(BasisVector(label, sum(parities[x] for x in word) & 1, weight))
        super().__init__(basis, base.ranks)

    def project(self, word: Sequence[int]) -> Optional[Tuple[int, int]]:
        """Image of the tensor v_{w1}⊗…⊗v_{ws} as (sign, monomial index), or None if zero."""
        normal = normalize_word(word, self.base.parities(), self.kind)
        if normal is None:
            return None
        sign, monomial = normal
        return sign, self.word_index[monomial]

    def embed(self, index: int) -> Dict[Word, Scalar]:
        """Symmetrized tensor (1/s!) Σ_σ ±σ(word) representing a monomial."""
        word = self.words[index]
        parities = self.base.parities()
        weight = to_scalar(Fraction(1, factorial(self.degree)))
        tensor: Dict[Word, Scalar] = {}
        for order in permutations(range(self.degree)):
            permuted = tuple(word[i] for i in order)
            sign, _ = normalize_word(permuted, parities, self.kind) or (0, ())
            if sign:
                value = tensor.get(permuted, 0) + sign * weight
                if value:
                    tensor[permuted] = value
                else:
                    tensor.pop(permuted, None)
        return tensor


def tensor_word_index(word: Sequence[int], base_dim: int) -> int:
    index = 0
    for letter in word:
        index = index * base_dim + letter
    return index


def super_sym_power(v: SuperSpace, s: int) -> PowerSpace:
    return PowerSpace(v, s, SYMMETRIC)


def super_ext_power(v: SuperSpace, s: int) -> PowerSpace:
    return PowerSpace(v, s, EXTERIOR)


def projection_matrix(power: PowerSpace) -> SparseMatrix:
    """Matrix of T^s(V) → power, columns indexed by tensor words in base-dim digits."""
    n = power.base.dim
    columns: Dict[int, Vector] = {}
    for word in _all_words(n, power.degree):
        image = power.project(word)
        if image is not None:
            sign, index = image
            columns[tensor_word_index(word, n)] = {index: to_scalar(sign)}
    return SparseMatrix.from_columns(power.dim, n ** power.degree, columns)


def embedding_matrix(power: PowerSpace) -> SparseMatrix:
    n = power.base.dim
    columns = {
        index: {tensor_word_index(w, n): c for w, c in power.embed(index).items()}
        for index in range(power.dim)
    }
    return SparseMatrix.from_columns(n ** power.degree, power.dim, columns)


def _all_words(n: int, s: int) -> List[Word]:
    words: List[Word] = [()]
    for _ in range(s):
        words = [w + (letter,) for w in words for letter in range(n)]
    return words


def power_action(action: ModuleAction, s: int, kind: str) -> ModuleAction:
    """
    Induced derivation action on S^s or E^s of a module.

    x·(w_1⋯w_s) = Σ_t (−1)^{p(x)(p(w_1)+…+p(w_{t−1}))} w_1⋯(x·w_t)⋯w_s

    Args:
        action: ModuleAction on the base space
        s: Power degree
        kind: SYMMETRIC or EXTERIOR

    Returns:
        ModuleAction on the PowerSpace
    """
    power = PowerSpace(action.module, s, kind)
    parities = action.module.parities()
    matrices = []
    for i, m in enumerate(action.matrices):
        px = action.algebra.parity(i)
        columns: Dict[int, Vector] = {}
        for index, word in enumerate(power.words):
            image: Vector = {}
            prefix = 0
            for t, letter in enumerate(word):
                sign = -1 if (px & 1) and (prefix & 1) else 1
                for r, value in m.column(letter).items():
                    term = power.project(word[:t] + (r,) + word[t + 1:])
                    if term is not None:
                        term_sign, target = term
                        add_scaled(image, to_scalar(sign * term_sign) * value, {target: to_scalar(1)})
                prefix += parities[letter]
            if image:
                columns[index] = image
        matrices.append(SparseMatrix.from_columns(power.dim, power.dim, columns))
    return ModuleAction(action.algebra, power, matrices, f"{kind}^{s} {action.name}")
