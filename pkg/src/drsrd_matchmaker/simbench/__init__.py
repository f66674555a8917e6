"""
Synthetic experiments and the command-line entry point.
"""

from .experiment import ground_truth_relevant, run_precision_experiment, run_sweep, run_trials, write_csv
from .generator import generate_queries, generate_resources

__all__ = [
    "generate_resources", "generate_queries", "ground_truth_relevant", "run_trials",
    "run_precision_experiment", "run_sweep", "write_csv",
]
