"""
DRSRD matchmaker: resource discovery over dynamic rough sets with
ontology-based match degrees.
"""

__version__ = "0.1.0"
