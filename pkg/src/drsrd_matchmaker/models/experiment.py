"""
Simulation harness models.
"""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config import DEFAULT_THRESHOLD


class GeneratorConfig(BaseModel):
    """Synthetic repository and query generation parameters."""
    model_config = ConfigDict(frozen=True)

    resource_count: int = Field(..., ge=1, description="Number of advertised resources")
    certainty: float = Field(..., ge=0.0, le=1.0, description="Probability a property value is present")
    query_count: int = Field(..., ge=0, description="Number of generated requests")
    seed: int = Field(..., ge=0, lt=2**64, description="64-bit seed")
    threshold: float = Field(default=DEFAULT_THRESHOLD, ge=0.0, le=1.0, description="Retrieval and relevance threshold")
    workers: int = Field(default=1, ge=1, description="Threads used to run queries")
    reduce: bool = Field(default=False, description="Apply dependent-property reduction in drsrd")


class TrialOutcome(BaseModel):
    """Result of one (query, algorithm) trial."""
    model_config = ConfigDict(frozen=True)

    algorithm: str = Field(..., description="Algorithm name")
    query_id: int = Field(..., ge=1, description="1-based query index")
    retrieved: int = Field(..., ge=0, description="Number of retrieved resources")
    correct: int = Field(..., ge=0, description="Retrieved resources that are relevant")
    precision: float = Field(..., ge=0.0, le=1.0, description="correct / retrieved, 1.0 when nothing retrieved")
    match_time_ns: int = Field(..., ge=0, description="Wall-clock matching time")
    zero_retrieved: bool = Field(default=False, description="Set when nothing was retrieved")

    @model_validator(mode="after")
    def _check_precision(self) -> "TrialOutcome":
        if self.correct > self.retrieved:
            raise ValueError("correct cannot exceed retrieved")
        if self.zero_retrieved != (self.retrieved == 0):
            raise ValueError("zero_retrieved flag must match the retrieved count")
        return self

    @classmethod
    def measured(cls, algorithm: str, query_id: int, retrieved: int, correct: int, match_time_ns: int) -> "TrialOutcome":
        precision = correct / retrieved if retrieved else 1.0
        return cls(
            algorithm=algorithm,
            query_id=query_id,
            retrieved=retrieved,
            correct=correct,
            precision=precision,
            match_time_ns=match_time_ns,
            zero_retrieved=retrieved == 0,
        )


class ExperimentRow(BaseModel):
    """One CSV row; aggregate rows carry query_id 'ALL'."""
    model_config = ConfigDict(frozen=True)

    algorithm: str
    certainty: float
    resources: int
    query_id: str
    retrieved: int
    correct: int
    precision: float
    match_time_ns: int

    def csv_fields(self) -> list:
        return [
            self.algorithm,
            f"{self.certainty:.6f}",
            str(self.resources),
            self.query_id,
            str(self.retrieved),
            str(self.correct),
            f"{self.precision:.6f}",
            str(self.match_time_ns),
        ]


CSV_HEADER = ["algorithm", "certainty", "resources", "query_id", "retrieved", "correct", "precision", "match_time_ns"]
