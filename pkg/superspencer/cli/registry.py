"""Case labels: parsing into graded pairs, and the list of shipped cases."""
import logging
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from superspencer.exceptions import InvalidCaseLabelError
from superspencer.grading import (
    GradedPair,
    cpe_pair,
    osp_grading,
    pe_extension_pair,
    pe_pair,
    q_grading,
    reduced_pair,
    sl_depth1_grading,
    sl_standard_grading,
    spe_pair,
)
from superspencer.schemas.cases import CaseSpec
from superspencer.services.cache import computation_cache

logger = logging.getLogger(__name__)

REDUCED_PREFIX = "reduced:"


def _ints(label: str, parts: List[str], count: int) -> List[int]:
    if len(parts) != count:
        raise InvalidCaseLabelError(f"Case '{label}' needs {count} integer parameters")
    try:
        return [int(part) for part in parts]
    except ValueError:
        raise InvalidCaseLabelError(f"Case '{label}' has a non-integer parameter") from None


def _pe_ext(label: str, parts: List[str]) -> GradedPair:
    if len(parts) != 3:
        raise InvalidCaseLabelError(f"Case '{label}' must read pe-ext:n:a:b")
    (n,) = _ints(label, parts[:1], 1)
    try:
        a, b = Fraction(parts[1]), Fraction(parts[2])
    except (ValueError, ZeroDivisionError):
        raise InvalidCaseLabelError(f"Case '{label}' has a malformed rational a or b") from None
    return pe_extension_pair(n, a, b)


def _q(label: str, parts: List[str]) -> GradedPair:
    if len(parts) != 3 or parts[2] not in ("+", "-"):
        raise InvalidCaseLabelError(f"Case '{label}' must read q:n:p:+ or q:n:p:-")
    n, p = _ints(label, parts[:2], 2)
    return q_grading(n, p, parts[2])


_BUILDERS: Dict[str, Callable[[str, List[str]], GradedPair]] = {
    "pe": lambda label, parts: pe_pair(*_ints(label, parts, 1)),
    "spe": lambda label, parts: spe_pair(*_ints(label, parts, 1)),
    "cpe": lambda label, parts: cpe_pair(*_ints(label, parts, 1)),
    "pe-ext": _pe_ext,
    "sl-std": lambda label, parts: sl_standard_grading(*_ints(label, parts, 2)),
    "sl-d1": lambda label, parts: sl_depth1_grading(*_ints(label, parts, 4)),
    "q": _q,
    "osp": lambda label, parts: osp_grading(*_ints(label, parts, 2)),
}


def parse_label(label: str) -> GradedPair:
    """
    Build the graded pair named by a case label.

    Grammar: "pe:n", "spe:n", "cpe:n", "pe-ext:n:a:b", "sl-std:m:n",
    "sl-d1:m:n:p:q", "q:n:p:±", "osp:m:2n", each optionally prefixed by
    "reduced:".

    Raises:
        InvalidCaseLabelError: if the label does not parse
        InvalidParameterError: if the parameters are out of range for the family
    """
    if label.startswith(REDUCED_PREFIX):
        return reduced_pair(parse_label(label[len(REDUCED_PREFIX):]))
    family, _, rest = label.partition(":")
    builder = _BUILDERS.get(family)
    if builder is None or not rest:
        raise InvalidCaseLabelError(f"Unknown case label '{label}'")
    pair = builder(label, rest.split(":"))
    logger.debug(f"Parsed case {label} as {pair.g0.name}")
    return pair


def get_pair(label: str) -> GradedPair:
    """parse_label through the computation cache."""
    return computation_cache.get_or_build("pair", label, lambda: parse_label(label))


def canonical_label(label: str) -> str:
    """The label the built pair carries, e.g. 'pe-ext:3:1:3' for 'pe-ext:3:1:3/1'."""
    return get_pair(label).label


# (label, orders, description)
_SHIPPED: List[Tuple[str, List[int], str]] = [
    ("pe:2", [1, 2], "periplectic pe(2)"),
    ("pe:3", [1, 2], "periplectic pe(3)"),
    ("spe:2", [1, 2], "special periplectic spe(2)"),
    ("spe:3", [1, 2], "special periplectic spe(3)"),
    ("cpe:2", [1, 2], "pe(2) with the identity adjoined"),
    ("cpe:3", [1, 2], "pe(3) with the identity adjoined"),
    ("pe-ext:2:1:2", [1, 2], "spe(2) extended by tau + 2z"),
    ("pe-ext:3:1:3", [1, 2], "spe(3) extended by tau + 3z"),
    ("pe-ext:3:1:1", [1], "spe(3) extended by tau + z"),
    ("pe-ext:4:1:4", [1, 2], "spe(4) extended by tau + 4z"),
    ("sl-std:1:2", [1, 2, 3], "vect(0|2)"),
    ("sl-std:1:3", [1, 2, 3, 4], "vect(0|3)"),
    ("reduced:sl-std:1:2", [1, 2, 3], "svect(0|2)"),
    ("reduced:sl-std:1:3", [1, 2, 3], "svect(0|3)"),
    ("sl-std:2:2", [1, 2, 3], "Penrose case sl(2|2), non-faithful"),
    ("reduced:sl-std:2:2", [1, 2, 3, 4], "Penrose case psl(2|2)"),
    ("sl-std:2:3", [1, 2, 3], "Penrose case sl(2|3)"),
    ("reduced:sl-std:2:3", [1, 2], "Penrose case sl(2|3), reduced"),
    ("sl-std:3:2", [1, 2, 3], "Penrose case sl(3|2)"),
    ("sl-std:3:3", [1, 2, 3], "Penrose case sl(3|3)"),
    ("sl-d1:2:3:0:1", [1, 2], "depth-one sl(2|3), V' = (2|1)"),
    ("sl-d1:2:4:0:1", [1, 2], "depth-one sl(2|4), V' = (2|1)"),
    ("sl-d1:4:2:1:1", [1, 2], "depth-one sl(4|2), V' = (3|1)"),
    ("q:3:1:+", [1, 2], "queer grassmannian of q(3), p = 1"),
    ("q:3:1:-", [1, 2], "queer grassmannian of q(3), p = 1, other summand"),
    ("osp:4:2", [1, 2, 3], "orthosymplectic osp(4|2)"),
    ("reduced:osp:4:2", [1, 2, 3], "orthosymplectic osp(4|2), reduced"),
    ("osp:5:2", [1, 2, 3], "orthosymplectic osp(5|2)"),
    ("reduced:osp:5:2", [1, 2, 3], "orthosymplectic osp(5|2), reduced"),
]


def shipped_cases() -> List[CaseSpec]:
    """The cases `list-cases` prints and `run`/`verify` use without --case."""
    return [CaseSpec(label=label, k_range=ks, description=text) for label, ks, text in _SHIPPED]
