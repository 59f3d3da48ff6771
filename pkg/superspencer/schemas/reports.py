"""Pydantic models for module and run reports."""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from superspencer.superalg import Parity, Weight


class WeightModel(BaseModel):
    """Weight Σ a_i ε_i + Σ b_j δ_j with coordinates written "p" or "p/q"."""

    eps: List[str] = Field(default_factory=list, description="ε-coordinates")
    delta: List[str] = Field(default_factory=list, description="δ-coordinates")

    @classmethod
    def from_weight(cls, weight: Weight) -> "WeightModel":
        return cls(**weight.to_dict())

    def to_weight(self) -> Weight:
        return Weight.from_dict({"eps": self.eps, "delta": self.delta})


class WeightCount(BaseModel):
    weight: WeightModel
    count: int = Field(..., ge=1)


class HighestVectorModel(BaseModel):
    """A highest vector of a module, in the module's basis labels."""

    weight: WeightModel
    parity: Literal["even", "odd"]
    coords: Dict[str, str] = Field(..., description="Basis label -> coefficient")


class FactorModel(BaseModel):
    """One composition factor."""

    weight: WeightModel = Field(..., description="Highest weight of the factor")
    dim: int = Field(..., ge=1)
    parity: Literal["even", "odd"]
    certified: bool = Field(
        ...,
        description="True when every (parity, weight) block of highest vectors is one-dimensional",
    )


class SplitnessModel(BaseModel):
    """Whether one step of the composition series splits."""

    kind: Literal["adjacent", "filtration"]
    factors: List[int] = Field(..., description="Indices of the factors involved")
    split: bool


class ModuleReport(BaseModel):
    """g_0-module structure of a space."""

    dim: int = Field(..., ge=0)
    weight_multiplicities: List[WeightCount] = Field(default_factory=list)
    highest: List[HighestVectorModel] = Field(default_factory=list)
    factors: List[FactorModel] = Field(default_factory=list)
    splitness: List[SplitnessModel] = Field(default_factory=list)
    raising: List[str] = Field(default_factory=list, description="Labels of raising operators")
    weight_frame: str = Field(default="torus coordinates", description="How weights are written")
    notes: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_dims(self):
        """Factor dimensions and weight multiplicities both add up to dim."""
        if self.factors and sum(f.dim for f in self.factors) != self.dim:
            raise ValueError("Composition factor dimensions do not add up to dim")
        if self.weight_multiplicities and sum(w.count for w in self.weight_multiplicities) != self.dim:
            raise ValueError("Weight multiplicities do not add up to dim")
        return self

    def has_nonsplit(self) -> bool:
        return any(not s.split for s in self.splitness)


class InvariantChecks(BaseModel):
    """Identities verified on a Spencer complex."""

    square_zero: bool
    equivariant: bool
    rank_identity: Optional[bool] = Field(
        default=None, description="None when g_k lies beyond a truncated tower"
    )


class OrderReport(BaseModel):
    """Everything computed at one order k."""

    k: int
    dim: int = Field(..., description="dim H^{k,2}")
    kernel_dim: int
    image_dim: int
    checks: Optional[InvariantChecks] = None
    module: Optional[ModuleReport] = None


class TowerReport(BaseModel):
    dims: Dict[int, int] = Field(..., description="k -> dim g_k, starting at k = -1")
    superdims: Dict[int, List[int]] = Field(..., description="k -> [even, odd]")
    stabilized: bool
    truncated: bool


class ExpectationDiff(BaseModel):
    """One mismatch between a computed order and its expectation."""

    k: int
    field: str
    expected: Any
    actual: Any
    source: str


class RunReport(BaseModel):
    """Result of running one case."""

    schema_version: str
    case: str
    g0: str
    g0_superdim: List[int]
    gminus1_superdim: List[int]
    faithful: bool
    tower: TowerReport
    orders: List[OrderReport] = Field(default_factory=list)
    diffs: Optional[List[ExpectationDiff]] = None
    timing_ms: Optional[int] = None

    def order(self, k: int) -> OrderReport:
        for entry in self.orders:
            if entry.k == k:
                return entry
        raise KeyError(k)


def parity_label(parity: int) -> str:
    return Parity.of(parity).label
