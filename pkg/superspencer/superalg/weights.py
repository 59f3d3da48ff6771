"""Torus weights in the (ε, δ) coordinate basis, and parities."""
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from superspencer.exceptions import DimensionMismatchError

Number = Union[int, Fraction]


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    @classmethod
    def of(cls, value: int) -> "Parity":
        return cls(value & 1)

    @property
    def label(self) -> str:
        return self.name.lower()


@dataclass(frozen=True, order=True)
class Weight:
    """A weight Σ a_i ε_i + Σ b_j δ_j with rational coordinates.

    Field order makes the dataclass ordering lexicographic on (ε-part, δ-part).
    """

    eps: Tuple[Fraction, ...] = ()
    delta: Tuple[Fraction, ...] = ()

    @classmethod
    def make(cls, eps: Iterable[Number] = (), delta: Iterable[Number] = ()) -> "Weight":
        return cls(tuple(Fraction(x) for x in eps), tuple(Fraction(x) for x in delta))

    @classmethod
    def zero(cls, eps_rank: int, delta_rank: int) -> "Weight":
        return cls((Fraction(0),) * eps_rank, (Fraction(0),) * delta_rank)

    @classmethod
    def unit(cls, kind: str, index: int, eps_rank: int, delta_rank: int, coef: Number = 1) -> "Weight":
        """coef·ε_index or coef·δ_index (indices start at 1)."""
        eps = [Fraction(0)] * eps_rank
        delta = [Fraction(0)] * delta_rank
        target = eps if kind == "eps" else delta
        target[index - 1] = Fraction(coef)
        return cls(tuple(eps), tuple(delta))

    @property
    def ranks(self) -> Tuple[int, int]:
        return (len(self.eps), len(self.delta))

    def _check(self, other: "Weight") -> None:
        if self.ranks != other.ranks:
            raise DimensionMismatchError(f"Weight ranks differ: {self.ranks} vs {other.ranks}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(
            tuple(a + b for a, b in zip(self.eps, other.eps)),
            tuple(a + b for a, b in zip(self.delta, other.delta)),
        )

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.eps), tuple(-a for a in self.delta))

    def scale(self, coef: Number) -> "Weight":
        c = Fraction(coef)
        return Weight(tuple(c * a for a in self.eps), tuple(c * a for a in self.delta))

    def is_zero(self) -> bool:
        return not any(self.eps) and not any(self.delta)

    def is_positive(self) -> bool:
        """True when the first nonzero coordinate of (ε-part, δ-part) is positive."""
        for value in self.eps + self.delta:
            if value:
                return value > 0
        return False

    def coordinate(self, kind: str, index: int) -> Fraction:
        return (self.eps if kind == "eps" else self.delta)[index - 1]

    def to_dict(self) -> Dict[str, List[str]]:
        return {
            "eps": [_fmt(x) for x in self.eps],
            "delta": [_fmt(x) for x in self.delta],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Sequence[Union[str, int]]]) -> "Weight":
        return cls.make(
            (Fraction(x) for x in data.get("eps", [])),
            (Fraction(x) for x in data.get("delta", [])),
        )

    def __str__(self) -> str:
        terms = []
        for name, coords in (("e", self.eps), ("d", self.delta)):
            for i, value in enumerate(coords, start=1):
                if not value:
                    continue
                if value == 1:
                    coef = "+"
                elif value == -1:
                    coef = "-"
                else:
                    coef = f"{'+' if value > 0 else ''}{_fmt(value)}"
                terms.append(f"{coef}{name}{i}")
        text = "".join(terms).lstrip("+")
        return text or "0"


def _fmt(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class WeightFrame:
    """How a case writes the torus weights of its modules.

    ``drop_eps`` lists (1-based) ε-coordinates that only count the grading
    degree and are left out. With ``trace_eps`` the ε-part is taken modulo
    ε_1 + … + ε_m and written with its last coordinate 0, as for sl(m)-weights.
    """

    drop_eps: Tuple[int, ...] = ()
    trace_eps: bool = False

    @property
    def is_identity(self) -> bool:
        return not self.drop_eps and not self.trace_eps

    def apply(self, weight: Weight) -> Weight:
        eps = weight.eps
        if self.drop_eps:
            for index in self.drop_eps:
                if not 1 <= index <= len(eps):
                    raise DimensionMismatchError(
                        f"Cannot drop ε_{index} from a weight of ranks {weight.ranks}"
                    )
            eps = tuple(c for i, c in enumerate(eps, start=1) if i not in self.drop_eps)
        if self.trace_eps and eps:
            shift = eps[-1]
            eps = tuple(c - shift for c in eps)
        return Weight(eps, weight.delta)

    def describe(self) -> str:
        parts = []
        if self.drop_eps:
            parts.append("without " + ", ".join(f"e{i}" for i in self.drop_eps))
        if self.trace_eps:
            parts.append("e-part modulo the trace")
        return "; ".join(parts) or "torus coordinates"
