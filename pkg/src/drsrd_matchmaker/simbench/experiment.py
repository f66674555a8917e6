"""
Precision and matching-time experiments.

A trial runs one algorithm on one generated request against the masked
repository. A retrieved resource is correct when its unmasked record reaches
the retrieval threshold. Rows come out ordered by (query index, algorithm),
followed by one ``ALL`` row per algorithm.
"""

import csv
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import IO, Iterable, List, Sequence, Union

import numpy as np

from ..errors import ExperimentError
from ..matching.discovery import Algorithm, discover_with_report
from ..matching.matchmaker import RequestScorer
from ..models.experiment import CSV_HEADER, ExperimentRow, GeneratorConfig, TrialOutcome
from ..models.request import ResourceRequest
from ..ontology.taxonomy import Taxonomy
from ..registry.repository import Repository, to_information_table
from ..rough.table import InformationTable, ObjectSet
from .generator import generate_queries, generate_resources

logger = logging.getLogger(__name__)

AGGREGATE_ID = "ALL"


def _algorithms(algorithms: Iterable[Union[str, Algorithm]]) -> List[Algorithm]:
    parsed: List[Algorithm] = []
    for name in algorithms:
        algorithm = Algorithm.parse(name)
        if algorithm not in parsed:
            parsed.append(algorithm)
    if not parsed:
        raise ExperimentError("no algorithms to compare")
    return parsed


def relevant_in_table(
    tax: Taxonomy, table: InformationTable, request: ResourceRequest, threshold: float
) -> ObjectSet:
    """Objects of ``table`` whose aggregate match reaches ``threshold``."""
    scorer = RequestScorer(tax, request, table.attributes)
    return frozenset(obj for obj in table.objects if scorer.score(table.rows[obj]) >= threshold)


def ground_truth_relevant(
    tax: Taxonomy, ground_truth: Repository, request: ResourceRequest, threshold: float
) -> ObjectSet:
    """Resources relevant to ``request``, judged on their unmasked records."""
    table = to_information_table(ground_truth, tax.property_names())
    return relevant_in_table(tax, table, request, threshold)


def run_trials(
    tax: Taxonomy,
    truth: InformationTable,
    masked: InformationTable,
    queries: Sequence[ResourceRequest],
    algorithms: Iterable[Union[str, Algorithm]],
    threshold: float,
    reduce: bool = False,
    workers: int = 1,
) -> List[TrialOutcome]:
    """One outcome per (query, algorithm), in that order whatever ``workers`` is."""
    chosen = _algorithms(algorithms)

    def trial(numbered) -> List[TrialOutcome]:
        query_id, request = numbered
        relevant = relevant_in_table(tax, truth, request, threshold)
        outcomes = []
        for algorithm in chosen:
            outcome = discover_with_report(tax, masked, request, algorithm, threshold, reduce)
            retrieved = outcome.retrieved
            correct = sum(1 for resource in retrieved if resource in relevant)
            outcomes.append(
                TrialOutcome.measured(algorithm.value, query_id, len(retrieved), correct, outcome.match_time_ns)
            )
            if not retrieved:
                logger.warning("Query %d: %s retrieved nothing", query_id, algorithm.value)
        return outcomes

    numbered = list(enumerate(queries, start=1))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(trial, numbered))
    else:
        batches = [trial(item) for item in numbered]
    return [outcome for batch in batches for outcome in batch]


def _aggregate(algorithm: str, certainty: float, resources: int, outcomes: Sequence[TrialOutcome]) -> ExperimentRow:
    precisions = np.array([o.precision for o in outcomes], dtype=float)
    times = np.array([o.match_time_ns for o in outcomes], dtype=np.int64)
    return ExperimentRow(
        algorithm=algorithm,
        certainty=certainty,
        resources=resources,
        query_id=AGGREGATE_ID,
        retrieved=sum(o.retrieved for o in outcomes),
        correct=sum(o.correct for o in outcomes),
        precision=float(precisions.mean()) if precisions.size else 1.0,
        match_time_ns=int(round(times.mean())) if times.size else 0,
    )


def experiment_rows(
    outcomes: Sequence[TrialOutcome], algorithms: Sequence[Algorithm], certainty: float, resources: int
) -> List[ExperimentRow]:
    """Per-trial rows followed by the per-algorithm aggregates."""
    rows = [
        ExperimentRow(
            algorithm=o.algorithm,
            certainty=certainty,
            resources=resources,
            query_id=str(o.query_id),
            retrieved=o.retrieved,
            correct=o.correct,
            precision=o.precision,
            match_time_ns=o.match_time_ns,
        )
        for o in outcomes
    ]
    for algorithm in algorithms:
        mine = [o for o in outcomes if o.algorithm == algorithm.value]
        rows.append(_aggregate(algorithm.value, certainty, resources, mine))
    return rows


def run_precision_experiment(
    tax: Taxonomy, config: GeneratorConfig, algorithms: Iterable[Union[str, Algorithm]]
) -> List[ExperimentRow]:
    """Generate a repository and requests from ``config`` and compare ``algorithms`` on them."""
    chosen = _algorithms(algorithms)
    logger.info(
        "Experiment: %d resources, certainty %.2f, %d queries, seed %d, algorithms %s",
        config.resource_count, config.certainty, config.query_count, config.seed,
        ",".join(a.value for a in chosen),
    )
    truth_repo, masked_repo = generate_resources(tax, config)
    names = tax.property_names()
    truth = to_information_table(truth_repo, names)
    masked = to_information_table(masked_repo, names)
    queries = generate_queries(tax, config)

    outcomes = run_trials(
        tax, truth, masked, queries, chosen, config.threshold, reduce=config.reduce, workers=config.workers
    )
    rows = experiment_rows(outcomes, chosen, config.certainty, config.resource_count)
    for row in rows[len(outcomes):]:
        logger.info("%s: mean precision %.4f, mean match time %d ns", row.algorithm, row.precision, row.match_time_ns)
    return rows


def run_sweep(
    tax: Taxonomy,
    resources: Sequence[int],
    certainties: Sequence[float],
    seeds: Sequence[int],
    config: GeneratorConfig,
    algorithms: Iterable[Union[str, Algorithm]],
) -> List[ExperimentRow]:
    """
    One ``ALL`` row per (certainty, resources, algorithm), averaged over ``seeds``.

    ``config`` supplies query count, threshold, workers and reduction; its
    resource count, certainty and seed are replaced per cell.
    """
    chosen = _algorithms(algorithms)
    if not resources or not certainties or not seeds:
        raise ExperimentError("sweep needs at least one resource count, certainty and seed")

    rows: List[ExperimentRow] = []
    for certainty in certainties:
        for count in resources:
            per_algorithm = {a.value: [] for a in chosen}
            for seed in seeds:
                cell = GeneratorConfig(**{**config.model_dump(), "resource_count": count, "certainty": certainty, "seed": seed})
                for row in run_precision_experiment(tax, cell, chosen):
                    if row.query_id == AGGREGATE_ID:
                        per_algorithm[row.algorithm].append(row)
            for algorithm in chosen:
                cells = per_algorithm[algorithm.value]
                rows.append(
                    ExperimentRow(
                        algorithm=algorithm.value,
                        certainty=certainty,
                        resources=count,
                        query_id=AGGREGATE_ID,
                        retrieved=sum(r.retrieved for r in cells),
                        correct=sum(r.correct for r in cells),
                        precision=float(np.mean([r.precision for r in cells])),
                        match_time_ns=int(round(np.mean([r.match_time_ns for r in cells]))),
                    )
                )
    return rows


def write_csv(rows: Iterable[ExperimentRow], handle: IO[str]) -> None:
    """Header plus one line per row, ``\\n`` line endings."""
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())
