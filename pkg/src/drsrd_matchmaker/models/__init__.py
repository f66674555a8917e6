"""
Data models for the DRSRD matchmaker.
"""

from .discovery import CandidateReport, DynamicSetBundle, TransferStandard, WeightSplit
from .experiment import CSV_HEADER, ExperimentRow, GeneratorConfig, TrialOutcome
from .request import MatchResult, ResourceRequest, WeightedProperty
from .resource import ResourceRecord
from .values import NULL, AttributeValue, ValueType

__all__ = [
    "AttributeValue", "ValueType", "NULL", "ResourceRecord", "WeightedProperty",
    "ResourceRequest", "MatchResult", "TransferStandard", "DynamicSetBundle", "WeightSplit",
    "CandidateReport", "GeneratorConfig", "TrialOutcome", "ExperimentRow", "CSV_HEADER",
]
