"""
Data models produced by the candidate optimization pipeline.
"""

from fractions import Fraction
from typing import Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from .request import WeightedProperty

ObjectTuple = Tuple[str, ...]


class TransferStandard(BaseModel):
    """Threshold on transfer coefficients, kept exact internally."""
    model_config = ConfigDict(frozen=True)

    value: float = Field(..., ge=0.0, le=1.0, description="Standard in [0, 1]")
    _exact: Optional[Fraction] = PrivateAttr(default=None)

    @classmethod
    def of(cls, value: Union["TransferStandard", Fraction, float, int]) -> "TransferStandard":
        if isinstance(value, TransferStandard):
            return value
        exact = value if isinstance(value, Fraction) else Fraction(repr(float(value)))
        standard = cls(value=float(exact))
        standard._exact = exact
        return standard

    @property
    def exact(self) -> Fraction:
        if self._exact is None:
            # Decimal literals such as 0.85 stay exact: 17/20
            self._exact = Fraction(repr(self.value))
        return self._exact


class DynamicSetBundle(BaseModel):
    """All dynamic sets of one two-direction transfer, in universe order."""
    model_config = ConfigDict(frozen=True)

    inflated_main: ObjectTuple = Field(..., description="Outside objects transferred in")
    inflated_assistant: ObjectTuple = Field(..., description="Outside objects left out")
    contracted_main: ObjectTuple = Field(..., description="Inside objects transferred out")
    contracted_assistant: ObjectTuple = Field(..., description="Inside objects kept")
    two_direction: ObjectTuple = Field(..., description="Two-direction dynamic set")
    d_lower: ObjectTuple = Field(..., description="D-lower approximation of the dynamic set")
    d_upper: ObjectTuple = Field(..., description="D-upper approximation of the dynamic set")

    @model_validator(mode="after")
    def _check_nesting(self) -> "DynamicSetBundle":
        if not set(self.d_lower) <= set(self.d_upper):
            raise ValueError("D-lower approximation must be inside the D-upper approximation")
        return self


class WeightSplit(BaseModel):
    """Request split into high-priority (weight >= 0.5) and low-priority properties."""
    model_config = ConfigDict(frozen=True)

    high: Tuple[WeightedProperty, ...] = Field(default=(), description="High-priority properties, drive inflation")
    low: Tuple[WeightedProperty, ...] = Field(default=(), description="Low-priority properties, drive contraction")

    @model_validator(mode="after")
    def _check_sides(self) -> "WeightSplit":
        if any(p.weight < 0.5 for p in self.high):
            raise ValueError("high side holds weights >= 0.5 only")
        if any(p.weight >= 0.5 for p in self.low):
            raise ValueError("low side holds weights < 0.5 only")
        if {p.name for p in self.high} & {p.name for p in self.low}:
            raise ValueError("a property cannot sit on both sides")
        return self

    @property
    def high_names(self) -> list:
        return [p.name for p in self.high]

    @property
    def low_names(self) -> list:
        return [p.name for p in self.low]


class CandidateReport(BaseModel):
    """Provenance of one candidate optimization run."""
    model_config = ConfigDict(frozen=True)

    initial: ObjectTuple = Field(..., description="Initial candidate set")
    split: WeightSplit = Field(..., description="Weight split of the request")
    d_plus: TransferStandard = Field(..., description="Inward transfer standard")
    d_minus: TransferStandard = Field(..., description="Outward transfer standard")
    inflated: ObjectTuple = Field(default=(), description="Objects added by inflation over the high-priority properties")
    contracted: ObjectTuple = Field(default=(), description="Objects removed by contraction over the low-priority properties")
    two_direction: ObjectTuple = Field(..., description="Two-direction dynamic set")
    reduced_attributes: Tuple[str, ...] = Field(..., description="Attributes used for the D-lower approximation")
    final: ObjectTuple = Field(..., description="D-lower approximation of the dynamic set")
    d_upper: ObjectTuple = Field(default=(), description="D-upper approximation of the dynamic set")
