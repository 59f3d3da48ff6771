"""Pydantic models for the shipped expectation tables."""
import re
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from superspencer.schemas.reports import WeightModel


# "derived" marks values worked out by hand from a cited statement
SOURCE_KINDS = ("theorem", "lemma", "proposition", "table", "derived")
SOURCE_PATTERN = re.compile(r"^(" + "|".join(SOURCE_KINDS) + r"): \S.{7,}")


class ExpectedFactor(BaseModel):
    """A composition factor a case must produce."""

    weight: WeightModel
    parity: Optional[Literal["even", "odd"]] = None
    dim: Optional[int] = Field(default=None, ge=1)


class Expectation(BaseModel):
    """Expected H^{k,2} data for one case and order."""

    case: str = Field(..., description="Case label")
    k: int = Field(..., ge=1)
    expected_dim: Optional[int] = Field(default=None, ge=0)
    expected_factors: Optional[List[ExpectedFactor]] = None
    expected_splitness: Optional[Literal["split", "nonsplit"]] = None
    source: str = Field(..., description="Where the expected values come from")

    @field_validator("source")
    @classmethod
    def validate_source(cls, value: str) -> str:
        """Sources read "<kind>: <statement>", kind one of SOURCE_KINDS."""
        match = SOURCE_PATTERN.match(value)
        if match is None:
            raise ValueError(
                f"Expectation source must read '<kind>: <statement>' with kind in {SOURCE_KINDS}"
            )
        return value


class ExpectationTable(BaseModel):
    """One shipped JSON file of expectations."""

    name: str
    description: str = ""
    expectations: List[Expectation] = Field(default_factory=list)
