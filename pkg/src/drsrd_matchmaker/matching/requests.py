"""
Request documents: one weighted property per line,
``<property> weight <w> [value <v>]``.
"""

import re
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError

from ..errors import RequestError
from ..models.request import ResourceRequest, WeightedProperty
from ..models.values import ValueType
from ..ontology.taxonomy import NAME_PATTERN, Taxonomy

_REQUEST_LINE = re.compile(rf"^({NAME_PATTERN})\s+weight\s+(\S+)(?:\s+value\s+(\S+))?$")


def _numeric(value_type: ValueType, raw: str) -> Union[int, float]:
    return float(raw) if value_type is ValueType.REAL else int(raw)


def parse_request(text: str, tax: Taxonomy, source: Optional[str] = None) -> ResourceRequest:
    """Parse a request document against the taxonomy's property types."""
    properties: List[WeightedProperty] = []
    seen = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _REQUEST_LINE.match(line)
        if not match:
            raise RequestError(f"cannot parse {line!r}", number, source)
        name, weight, value = match.groups()
        if name not in tax.properties:
            raise RequestError(f"unknown property {name!r}", number, source)
        if name in seen:
            raise RequestError(f"property {name!r} requested twice", number, source)
        value_type = tax.properties[name].value_type
        if value_type.is_numeric and value is None:
            raise RequestError(f"numeric property {name!r} needs a value", number, source)
        try:
            properties.append(
                WeightedProperty(
                    name=name,
                    weight=float(weight),
                    value=_numeric(value_type, value) if value_type.is_numeric else None,
                )
            )
        except (ValueError, ValidationError) as exc:
            raise RequestError(f"invalid weight or value for {name!r}: {exc}", number, source) from None
        seen.add(name)
    if not properties:
        raise RequestError("request has no properties", None, source or "<input>")
    return ResourceRequest(properties=tuple(properties))


def load_request(path: Union[str, Path], tax: Taxonomy) -> ResourceRequest:
    path = Path(path)
    return parse_request(path.read_text(encoding="utf-8"), tax, str(path))
