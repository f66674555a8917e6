"""
Shared fixtures: the six-object table, a layered test taxonomy and a temporary repository.
"""

import pytest

from drsrd_matchmaker.config import DEFAULT_TAXONOMY_PATH
from drsrd_matchmaker.models.values import AttributeValue
from drsrd_matchmaker.ontology.taxonomy import load_taxonomy, parse_taxonomy
from drsrd_matchmaker.registry.repository import open_repository
from drsrd_matchmaker.rough.table import InformationTable

LAYERED_TAXONOMY = """
class Resource
class Hardware parent Resource
class Processor parent Hardware
class CPU parent Processor
class Software parent Resource
class OperatingSystem parent Software
class Distribution parent OperatingSystem
class Network parent Resource

property kind type text class Resource
property hardware type text class Hardware
property processor type text class Processor
property cpu_model type text class CPU
property os type text class OperatingSystem
property distro type text class Distribution
property bandwidth type real class Network
property cpu_speed type real class CPU
property cpu_cores type int class CPU
property cpu_cache type long class CPU
"""


def int_table(columns):
    """Table over u1..un from ``{attr: [int or None, ...]}``; None is Null."""
    attributes = tuple(columns)
    size = len(next(iter(columns.values()), []))
    objects = tuple(f"u{i}" for i in range(1, size + 1))
    rows = {
        obj: tuple(
            AttributeValue.null() if columns[a][i] is None else AttributeValue.int_(columns[a][i])
            for a in attributes
        )
        for i, obj in enumerate(objects)
    }
    return InformationTable(objects=objects, attributes=attributes, rows=rows)


@pytest.fixture
def six_table():
    """a: u1=1, u2=1, u3=2, u4=2, u5=3, u6=3."""
    return int_table({"a": [1, 1, 2, 2, 3, 3]})


@pytest.fixture
def layered_taxonomy():
    return parse_taxonomy(LAYERED_TAXONOMY, "layered.tax")


@pytest.fixture
def grid_taxonomy():
    return load_taxonomy(DEFAULT_TAXONOMY_PATH)


@pytest.fixture
def repo_path(tmp_path):
    return tmp_path / "resources.repo"


@pytest.fixture
def empty_repo(repo_path, grid_taxonomy):
    return open_repository(repo_path, grid_taxonomy)


@pytest.fixture
def make_table():
    return int_table


def random_columns(rng, max_objects=12, max_attributes=4, alphabet=3):
    """Random cells over {0..alphabet-1} plus Null, for oracle suites."""
    size = int(rng.integers(0, max_objects + 1))
    width = int(rng.integers(1, max_attributes + 1))
    columns = {}
    for j in range(width):
        draws = rng.integers(0, alphabet + 1, size=size)
        columns[f"p{j}"] = [None if d == alphabet else int(d) for d in draws]
    return columns


@pytest.fixture
def random_table():
    """Callable drawing a random small table from a numpy generator."""
    def draw(rng, **kwargs):
        return int_table(random_columns(rng, **kwargs))
    return draw
