"""
Advertised resource records.
"""

import re
from typing import Dict

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .values import AttributeValue

_ID_PATTERN = re.compile(r"^[^\s;=%]+$")


class ResourceRecord(BaseModel):
    """One advertised resource: identifier plus property values (Null when unknown)."""
    model_config = ConfigDict(frozen=True)

    id: str = Field(..., description="Resource identifier, unique in a repository")
    values: Dict[str, AttributeValue] = Field(default_factory=dict, description="Property name to value")

    @field_validator("id")
    @classmethod
    def _check_id(cls, value: str) -> str:
        if not _ID_PATTERN.match(value):
            raise ValueError(f"resource id {value!r} must be non-empty without whitespace, ';', '=' or '%'")
        return value

    def value(self, name: str) -> AttributeValue:
        return self.values.get(name, AttributeValue.null())
