"""
Resource requests and match results.
"""

import math
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

Number = Union[int, float]


class WeightedProperty(BaseModel):
    """A requested property with its weight and, for numeric properties, the requested value."""
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1, description="Requested property name")
    weight: float = Field(..., gt=0.0, le=1.0, description="Priority weight in (0, 1]")
    value: Optional[Number] = Field(None, description="Requested value for numeric properties")

    @field_validator("value")
    @classmethod
    def _positive(cls, value: Optional[Number]) -> Optional[Number]:
        if value is None:
            return value
        if not math.isfinite(value):
            raise ValueError("requested numeric values must be finite")
        if not value > 0:
            raise ValueError("requested numeric values must be positive")
        return value


class ResourceRequest(BaseModel):
    """Weighted requested properties, in request order."""
    model_config = ConfigDict(frozen=True)

    properties: Tuple[WeightedProperty, ...] = Field(..., min_length=1, description="Requested properties")

    @field_validator("properties")
    @classmethod
    def _unique_names(cls, value: Tuple[WeightedProperty, ...]) -> Tuple[WeightedProperty, ...]:
        seen = set()
        for prop in value:
            if prop.name in seen:
                raise ValueError(f"property {prop.name!r} requested twice")
            seen.add(prop.name)
        return value

    @property
    def names(self) -> List[str]:
        return [prop.name for prop in self.properties]

    def scaled(self, factor: float) -> "ResourceRequest":
        """Same request with every weight multiplied by ``factor``."""
        return ResourceRequest(
            properties=tuple(
                WeightedProperty(name=p.name, weight=p.weight * factor, value=p.value)
                for p in self.properties
            )
        )


class MatchResult(BaseModel):
    """A ranked match: resource id, aggregate degree and 1-based rank."""
    model_config = ConfigDict(frozen=True)

    resource: str = Field(..., description="Resource identifier")
    degree: float = Field(..., ge=0.0, le=1.0, description="Aggregate match degree")
    rank: int = Field(..., ge=1, description="Position under descending degree")
