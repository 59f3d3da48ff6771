"""Exact rational scalars.

All matrix entries are elements of sympy's ``QQ`` domain (gmpy2 ``mpq`` when
available, otherwise sympy's pure-Python ``PythonMPQ``). Both keep fractions in
lowest terms with a positive denominator.
"""
from fractions import Fraction
from typing import Any, Union

from sympy.polys.domains import QQ

from superspencer.exceptions import InvalidParameterError

Scalar = Any  # QQ.dtype
ScalarLike = Union[int, str, Fraction, Scalar]

ZERO = QQ(0)
ONE = QQ(1)


def to_scalar(value: ScalarLike) -> Scalar:
    """Convert an int, Fraction, "p/q" string or QQ element to a QQ element."""
    if isinstance(value, bool):
        raise InvalidParameterError(f"Cannot use boolean {value!r} as a scalar")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_scalar(value)
    if QQ.of_type(value):
        return value
    raise InvalidParameterError(f"Cannot convert {value!r} to an exact rational")


def parse_scalar(text: str) -> Scalar:
    """Parse "p", "-p" or "p/q" into a QQ element."""
    try:
        fraction = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidParameterError(f"'{text}' is not an exact rational number") from e
    return QQ(fraction.numerator, fraction.denominator)


def to_fraction(value: ScalarLike) -> Fraction:
    """Convert a scalar to ``fractions.Fraction`` (used by weights and reports)."""
    if isinstance(value, Fraction):
        return value
    q = to_scalar(value)
    return Fraction(int(q.numerator), int(q.denominator))


def format_scalar(value: ScalarLike) -> str:
    """Render a scalar as "p" or "p/q"."""
    q = to_scalar(value)
    numerator, denominator = int(q.numerator), int(q.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def koszul_sign(a: int, b: int) -> int:
    """Return (-1)^(a*b) for parities a, b."""
    return -1 if (a & 1) and (b & 1) else 1
