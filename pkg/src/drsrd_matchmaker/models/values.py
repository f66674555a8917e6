"""
Typed attribute values.
"""

import math
from enum import Enum
from typing import Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

INT_MIN, INT_MAX = -(2**31), 2**31 - 1
LONG_MIN, LONG_MAX = -(2**63), 2**63 - 1


class ValueType(str, Enum):
    """Declared type of a property."""
    TEXT = "text"
    INT = "int"
    LONG = "long"
    REAL = "real"

    @property
    def is_numeric(self) -> bool:
        return self is not ValueType.TEXT


class AttributeValue(BaseModel):
    """A cell value: Text, Int, Long, Real, or Null (``type`` is None)."""
    model_config = ConfigDict(frozen=True)

    type: Optional[ValueType] = Field(None, description="Value type; None for Null")
    value: Union[str, int, float, None] = Field(None, description="Raw value; None for Null")

    @model_validator(mode="after")
    def _check_payload(self) -> "AttributeValue":
        kind, raw = self.type, self.value
        if kind is None:
            if raw is not None:
                raise ValueError("Null carries no payload")
        elif raw is None:
            raise ValueError(f"{kind.value} value is missing its payload")
        elif kind is ValueType.TEXT:
            if not isinstance(raw, str) or not raw:
                raise ValueError("text values are non-empty strings")
        elif kind in (ValueType.INT, ValueType.LONG):
            if isinstance(raw, bool) or not isinstance(raw, int):
                raise ValueError(f"{kind.value} values are integers")
            low, high = (INT_MIN, INT_MAX) if kind is ValueType.INT else (LONG_MIN, LONG_MAX)
            if not low <= raw <= high:
                raise ValueError(f"{raw} is out of range for {kind.value}")
        else:
            if isinstance(raw, bool) or not isinstance(raw, (int, float)):
                raise ValueError("real values are numbers")
            if not math.isfinite(raw):
                raise ValueError("real values are finite")
            if isinstance(raw, int):
                object.__setattr__(self, "value", float(raw))
        return self

    @classmethod
    def null(cls) -> "AttributeValue":
        return NULL

    @classmethod
    def text(cls, value: str) -> "AttributeValue":
        return cls(type=ValueType.TEXT, value=value)

    @classmethod
    def int_(cls, value: int) -> "AttributeValue":
        return cls(type=ValueType.INT, value=value)

    @classmethod
    def long(cls, value: int) -> "AttributeValue":
        return cls(type=ValueType.LONG, value=value)

    @classmethod
    def real(cls, value: float) -> "AttributeValue":
        return cls(type=ValueType.REAL, value=value)

    @classmethod
    def of(cls, value_type: ValueType, raw: Union[str, int, float]) -> "AttributeValue":
        return cls(type=value_type, value=raw)

    @classmethod
    def parse(cls, value_type: ValueType, raw: str) -> "AttributeValue":
        """Parse the textual form written by ``render``; empty text is Null."""
        if raw == "":
            return NULL
        if value_type is ValueType.TEXT:
            return cls.text(raw)
        if value_type is ValueType.REAL:
            return cls.real(float(raw))
        return cls(type=value_type, value=int(raw))

    @property
    def is_null(self) -> bool:
        return self.type is None

    @property
    def key(self) -> Tuple[Optional[str], Union[str, int, float, None]]:
        """Hashable identity; Null agrees only with Null, Int(1) differs from Long(1)."""
        return (self.type.value if self.type else None, self.value)

    def render(self) -> str:
        """Unescaped textual form; Null renders as the empty string."""
        if self.type is None:
            return ""
        if self.type is ValueType.REAL:
            return repr(self.value)
        return str(self.value)

    def __repr__(self) -> str:
        if self.type is None:
            return "Null"
        return f"{self.type.value.capitalize()}({self.value!r})"


NULL = AttributeValue()
