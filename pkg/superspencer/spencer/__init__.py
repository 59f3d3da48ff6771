"""Spencer complexes and their cohomology."""
from superspencer.spencer.complex import (
    CohomologySpace,
    SpencerComplex,
    cochain_action,
    cochain_space,
    euler_check,
    spencer_cohomology,
    spencer_differential,
)

__all__ = [
    "CohomologySpace",
    "SpencerComplex",
    "cochain_action",
    "cochain_space",
    "euler_check",
    "spencer_cohomology",
    "spencer_differential",
]
