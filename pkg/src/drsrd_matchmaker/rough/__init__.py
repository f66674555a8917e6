"""
Classical and dynamic rough-set calculus over information tables.
"""

from .dynamic import (
    contracted_assistant_set,
    contracted_main_set,
    contracted_set,
    d_lower_approx,
    d_upper_approx,
    dynamic_bundle,
    inflated_assistant_set,
    inflated_main_set,
    inflated_set,
    inward_coefficient,
    outward_coefficient,
    two_direction_set,
)
from .table import (
    InformationTable,
    Partition,
    dependency_degree,
    lower_approx,
    partition,
    positive_region,
    reduce_dependent_attributes,
    upper_approx,
)

__all__ = [
    "InformationTable", "Partition", "partition", "lower_approx", "upper_approx",
    "positive_region", "dependency_degree", "reduce_dependent_attributes",
    "outward_coefficient", "inward_coefficient", "inflated_main_set", "inflated_assistant_set",
    "contracted_main_set", "contracted_assistant_set", "inflated_set", "contracted_set",
    "two_direction_set", "d_lower_approx", "d_upper_approx", "dynamic_bundle",
]
