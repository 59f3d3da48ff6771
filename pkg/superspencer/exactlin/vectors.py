"""Sparse coordinate vectors: plain dicts index -> nonzero QQ element."""
from typing import Dict, List, Mapping, Sequence

from superspencer.exactlin.scalars import ZERO, Scalar, ScalarLike, to_scalar

Vector = Dict[int, Scalar]


def make_vector(entries: Mapping[int, ScalarLike]) -> Vector:
    """Build a vector, converting entries and dropping zeros."""
    result: Vector = {}
    for index, value in entries.items():
        q = to_scalar(value)
        if q:
            result[index] = q
    return result


def from_dense(values: Sequence[ScalarLike]) -> Vector:
    return make_vector(dict(enumerate(values)))


def to_dense(vec: Mapping[int, Scalar], length: int) -> List[Scalar]:
    return [vec.get(i, ZERO) for i in range(length)]


def add_scaled(target: Vector, coef: Scalar, other: Mapping[int, Scalar]) -> Vector:
    """In place: target += coef * other, removing entries that cancel."""
    if not coef:
        return target
    for index, value in other.items():
        updated = target.get(index, 0) + coef * value
        if updated:
            target[index] = updated
        else:
            target.pop(index, None)
    return target


def scaled(vec: Mapping[int, Scalar], coef: Scalar) -> Vector:
    if not coef:
        return {}
    return {index: coef * value for index, value in vec.items()}


def normalized(vec: Mapping[int, Scalar]) -> Vector:
    """Scale so the entry at the smallest index is 1."""
    lead = vec[min(vec)]
    return {index: value / lead for index, value in vec.items()}
