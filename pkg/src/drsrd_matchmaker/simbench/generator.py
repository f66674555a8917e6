"""
Synthetic resources and requests.

Randomness comes from numpy's PCG64 generator. Each purpose owns a stream:
``Generator(PCG64(SeedSequence(seed, spawn_key=(k,))))`` with k = 0 for
property values, 1 for masking and 2 for requests, so a run is reproducible
from its seed alone.

Per property, values are drawn uniformly from a small discrete domain. Known
properties of the bundled taxonomy have realistic domains; any other property
falls back to a domain for its value type.
"""

import logging
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from ..errors import ExperimentError
from ..models.experiment import GeneratorConfig
from ..models.request import ResourceRequest, WeightedProperty
from ..models.resource import ResourceRecord
from ..models.values import NULL, AttributeValue, ValueType
from ..ontology.taxonomy import Taxonomy
from ..registry.repository import Repository

logger = logging.getLogger(__name__)

VALUES_STREAM = 0
MASK_STREAM = 1
QUERY_STREAM = 2

MIN_REQUESTED = 2
MAX_REQUESTED = 6
WEIGHT_STEPS = 10

Raw = Union[str, int, float]

KNOWN_DOMAINS: Dict[str, Tuple[Raw, ...]] = {
    "resource_kind": ("Cluster", "Workstation", "Mainframe"),
    "cluster_scheduler": ("PBS", "SGE", "Condor", "LSF"),
    "cpu_speed": (1.0, 1.5, 2.0, 2.5, 3.0),
    "cpu_elements": (1, 2, 4, 8, 16),
    "memory": (512, 1024, 2048, 4096, 8192),
    "main_memory": (512, 1024, 2048, 4096, 8192),
    "virtual_memory": (1024, 2048, 4096, 8192),
    "hard_disk": (80, 160, 320, 640, 1280),
    "bandwidth": (10.0, 100.0, 1000.0),
    "os": ("Linux", "Windows", "Solaris", "AIX"),
    "os_distribution": ("Ubuntu", "RedHat", "SUSE", "Debian"),
    "cpu_vendor": ("Intel", "AMD", "IBM", "Sun"),
}

TYPE_DOMAINS: Dict[ValueType, Tuple[Raw, ...]] = {
    ValueType.INT: (1, 2, 4, 8, 16),
    ValueType.LONG: (1 << 30, 1 << 31, 1 << 32, 1 << 33),
    ValueType.REAL: (0.5, 1.0, 1.5, 2.0, 2.5),
}


def stream(seed: int, purpose: int) -> np.random.Generator:
    """Independent generator for one purpose of one seed."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(purpose,))))


def value_domain(tax: Taxonomy, name: str) -> Tuple[AttributeValue, ...]:
    """Typed values a generated resource may advertise for ``name``."""
    value_type = tax.property(name).value_type
    raw = KNOWN_DOMAINS.get(name)
    if raw is None:
        raw = TYPE_DOMAINS.get(value_type) or tuple(f"{name}-{k}" for k in range(1, 5))
    return tuple(AttributeValue.of(value_type, item) for item in raw)


def generate_resources(tax: Taxonomy, config: GeneratorConfig) -> Tuple[Repository, Repository]:
    """
    Ground-truth resources with every property set, and a masked copy where each
    value is independently replaced by Null with probability 1 - certainty.
    """
    names = tax.property_names()
    domains = [value_domain(tax, name) for name in names]
    values_rng = stream(config.seed, VALUES_STREAM)
    mask_rng = stream(config.seed, MASK_STREAM)

    picks = [values_rng.integers(len(domain), size=config.resource_count) for domain in domains]
    keep = mask_rng.random((config.resource_count, len(names))) < config.certainty

    truth: List[ResourceRecord] = []
    masked: List[ResourceRecord] = []
    width = len(str(config.resource_count))
    for i in range(config.resource_count):
        resource_id = f"R{i + 1:0{width}d}"
        values = {name: domains[j][picks[j][i]] for j, name in enumerate(names)}
        truth.append(ResourceRecord(id=resource_id, values=values))
        masked.append(
            ResourceRecord(
                id=resource_id,
                values={name: value if keep[i, j] else NULL for j, (name, value) in enumerate(values.items())},
            )
        )

    nulls = int((~keep).sum())
    logger.info(
        "Generated %d resources at certainty %.2f (%d of %d values masked)",
        config.resource_count, config.certainty, nulls, keep.size,
    )
    return Repository(records=tuple(truth)), Repository(records=tuple(masked))


def generate_queries(tax: Taxonomy, config: GeneratorConfig) -> List[ResourceRequest]:
    """Requests of 2-6 distinct properties, weights uniform on {0.1, ..., 1.0}."""
    names = tax.property_names()
    if config.query_count and not names:
        raise ExperimentError("taxonomy defines no properties to request")
    rng = stream(config.seed, QUERY_STREAM)
    upper = min(MAX_REQUESTED, len(names))
    lower = min(MIN_REQUESTED, upper)

    queries: List[ResourceRequest] = []
    for _ in range(config.query_count):
        size = int(rng.integers(lower, upper + 1))
        chosen: Sequence[int] = rng.choice(len(names), size=size, replace=False)
        properties = []
        for index in chosen:
            name = names[int(index)]
            weight = int(rng.integers(1, WEIGHT_STEPS + 1)) / WEIGHT_STEPS
            value = None
            if tax.property(name).value_type.is_numeric:
                domain = value_domain(tax, name)
                value = domain[int(rng.integers(len(domain)))].value
            properties.append(WeightedProperty(name=name, weight=weight, value=value))
        queries.append(ResourceRequest(properties=tuple(properties)))
    return queries
