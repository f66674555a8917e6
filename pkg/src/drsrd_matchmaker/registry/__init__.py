"""
Advertised Resource Repository.
"""

from .repository import (
    Repository,
    deregister,
    format_record,
    load,
    open_repository,
    parse_record,
    register,
    save,
    to_information_table,
    validate_record,
)

__all__ = [
    "Repository", "register", "deregister", "load", "save", "open_repository",
    "to_information_table", "validate_record", "format_record", "parse_record",
]
