"""
Advertised resource repository backed by a tab-separated record file.

One record per line: ``<id>\\t<prop>=<value>;<prop>=<value>`` with an empty value
for Null. Text values are percent-escaped for ``%``, ``;``, ``=``, tab and line
breaks. Value types come from the taxonomy's property definitions.

Repository handles are immutable snapshots. Mutations take an exclusive advisory
lock on ``<path>.lock``, re-read the file, rewrite it whole and return the new
snapshot; loads take a shared lock.
"""

import fcntl
import logging
import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..errors import RecordParseError, RepositoryError
from ..models.resource import ResourceRecord
from ..models.values import NULL, AttributeValue
from ..ontology.taxonomy import Taxonomy
from ..rough.table import InformationTable

logger = logging.getLogger(__name__)

_ESCAPES = {"%": "%25", ";": "%3B", "=": "%3D", "\t": "%09", "\n": "%0A", "\r": "%0D"}


def _escape(text: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in text)


def _unescape(text: str) -> str:
    if "%" not in text:
        return text
    out, i = [], 0
    while i < len(text):
        if text[i] == "%":
            code = text[i + 1:i + 3]
            if len(code) != 2:
                raise ValueError(f"truncated escape in {text!r}")
            out.append(chr(int(code, 16)))
            i += 3
        else:
            out.append(text[i])
            i += 1
    return "".join(out)


class Repository(BaseModel):
    """Ordered snapshot of advertised resources and its backing file."""
    model_config = ConfigDict(frozen=True)

    records: Tuple[ResourceRecord, ...] = Field(default=(), description="Records in registration order")
    path: Optional[Path] = Field(None, description="Backing record file")

    def __len__(self) -> int:
        return len(self.records)

    @property
    def ids(self) -> List[str]:
        return [record.id for record in self.records]

    def get(self, resource_id: str) -> ResourceRecord:
        for record in self.records:
            if record.id == resource_id:
                return record
        raise RepositoryError(f"unknown resource id {resource_id!r}")


@contextmanager
def _locked(path: Path, exclusive: bool) -> Iterator[None]:
    lock_path = path.with_name(path.name + ".lock")
    lock_path.parent.mkdir(parents=True, exist_ok=True)
    with open(lock_path, "a") as handle:
        fcntl.flock(handle.fileno(), fcntl.LOCK_EX if exclusive else fcntl.LOCK_SH)
        try:
            yield
        finally:
            fcntl.flock(handle.fileno(), fcntl.LOCK_UN)


def validate_record(tax: Taxonomy, record: ResourceRecord) -> ResourceRecord:
    """Check every property is bound in the taxonomy with a value of its declared type."""
    for name, value in record.values.items():
        if name not in tax.properties:
            raise RepositoryError(f"record {record.id!r}: unknown property {name!r}")
        declared = tax.properties[name].value_type
        if not value.is_null and value.type is not declared:
            raise RepositoryError(
                f"record {record.id!r}: property {name!r} is declared {declared.value}, got {value!r}"
            )
    return record


def format_record(record: ResourceRecord) -> str:
    fields = ";".join(f"{name}={_escape(value.render())}" for name, value in record.values.items())
    return f"{record.id}\t{fields}"


def parse_record(line: str, tax: Taxonomy, number: Optional[int] = None, source: Optional[str] = None) -> ResourceRecord:
    if "\t" not in line:
        raise RecordParseError("truncated record: missing tab after the id", number, source)
    resource_id, body = line.split("\t", 1)
    values: Dict[str, AttributeValue] = {}
    for item in body.split(";") if body else []:
        if "=" not in item:
            raise RecordParseError(f"expected <property>=<value>, got {item!r}", number, source)
        name, raw = item.split("=", 1)
        if name not in tax.properties:
            raise RecordParseError(f"unknown property {name!r}", number, source)
        if name in values:
            raise RecordParseError(f"property {name!r} given twice", number, source)
        try:
            values[name] = AttributeValue.parse(tax.properties[name].value_type, _unescape(raw))
        except (ValueError, ValidationError) as exc:
            raise RecordParseError(f"bad value for {name!r}: {raw!r} ({exc})", number, source) from None
    try:
        return ResourceRecord(id=resource_id, values=values)
    except ValidationError as exc:
        raise RecordParseError(f"bad record id {resource_id!r} ({exc})", number, source) from None


def _read(path: Path, tax: Taxonomy) -> Tuple[ResourceRecord, ...]:
    records: List[ResourceRecord] = []
    seen = set()
    with open(path, "r", encoding="utf-8", newline="\n") as handle:
        for number, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            record = parse_record(line, tax, number, str(path))
            if record.id in seen:
                raise RecordParseError(f"duplicate resource id {record.id!r}", number, str(path))
            seen.add(record.id)
            records.append(record)
    return tuple(records)


def _write(path: Path, records: Iterable[ResourceRecord]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, temp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            for record in records:
                handle.write(format_record(record) + "\n")
        os.replace(temp_name, path)
    except BaseException:
        if os.path.exists(temp_name):
            os.unlink(temp_name)
        raise


def load(path: Union[str, Path], tax: Taxonomy) -> Repository:
    """Read a record file; malformed lines raise RecordParseError with the line number."""
    path = Path(path)
    with _locked(path, exclusive=False):
        records = _read(path, tax)
    logger.info("Loaded repository %s with %d records", path, len(records))
    return Repository(records=records, path=path)


def open_repository(path: Union[str, Path], tax: Taxonomy) -> Repository:
    """Load ``path``, or an empty repository bound to it when the file does not exist."""
    path = Path(path)
    if not path.exists():
        return Repository(path=path)
    return load(path, tax)


def save(repo: Repository) -> Repository:
    """Write the whole snapshot to its backing file."""
    if repo.path is None:
        raise RepositoryError("repository has no backing path")
    with _locked(repo.path, exclusive=True):
        _write(repo.path, repo.records)
    logger.info("Saved repository %s (%d records)", repo.path, len(repo.records))
    return repo


def _current(repo: Repository, tax: Taxonomy) -> Tuple[ResourceRecord, ...]:
    if repo.path is not None and repo.path.exists():
        return _read(repo.path, tax)
    return repo.records


def register(repo: Repository, record: ResourceRecord, tax: Taxonomy) -> Repository:
    """Append ``record`` and commit; the returned snapshot reflects the file."""
    validate_record(tax, record)
    if repo.path is None:
        if record.id in repo.ids:
            raise RepositoryError(f"duplicate resource id {record.id!r}")
        return Repository(records=repo.records + (record,))
    with _locked(repo.path, exclusive=True):
        records = _current(repo, tax)
        if any(existing.id == record.id for existing in records):
            raise RepositoryError(f"duplicate resource id {record.id!r}")
        records = records + (record,)
        _write(repo.path, records)
    logger.info("Registered %s (%d records)", record.id, len(records))
    return Repository(records=records, path=repo.path)


def deregister(repo: Repository, resource_id: str, tax: Taxonomy) -> Repository:
    """Remove the record with ``resource_id`` and commit."""
    if repo.path is None:
        repo.get(resource_id)
        return Repository(records=tuple(r for r in repo.records if r.id != resource_id))
    with _locked(repo.path, exclusive=True):
        records = _current(repo, tax)
        if not any(existing.id == resource_id for existing in records):
            raise RepositoryError(f"unknown resource id {resource_id!r}")
        records = tuple(r for r in records if r.id != resource_id)
        _write(repo.path, records)
    logger.info("Deregistered %s (%d records)", resource_id, len(records))
    return Repository(records=records, path=repo.path)


def to_information_table(repo: Repository, names: Iterable[str]) -> InformationTable:
    """Objects are record ids in order, attributes ``names``; missing entries are Null."""
    attributes = tuple(names)
    rows = {
        record.id: tuple(record.values.get(name, NULL) for name in attributes)
        for record in repo.records
    }
    return InformationTable(objects=tuple(repo.ids), attributes=attributes, rows=rows)
