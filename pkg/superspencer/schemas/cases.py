"""Pydantic models describing what to run for a case."""
from typing import List

from pydantic import BaseModel, Field, field_validator


class Analyses(BaseModel):
    """Which stages run_case performs beyond the tower."""

    cohomology: bool = True
    report: bool = True
    verify: bool = False


class CaseSpec(BaseModel):
    """A case label with the orders to analyze."""

    label: str = Field(..., description="Case label, e.g. 'spe:3' or 'reduced:osp:5:2'")
    k_range: List[int] = Field(..., description="Orders k of H^{k,2} to compute")
    analyses: Analyses = Field(default_factory=Analyses)
    description: str = ""

    @field_validator("k_range")
    @classmethod
    def validate_k_range(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("k_range must not be empty")
        if any(k < 1 for k in value):
            raise ValueError("Orders must be at least 1")
        return sorted(set(value))
