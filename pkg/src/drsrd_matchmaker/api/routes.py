"""
API routes for the DRSRD Broker.
"""

import logging
from typing import Any, Dict, List, Optional

from fastapi import APIRouter, HTTPException, Request
from pydantic import BaseModel, Field

from ..config import Settings
from ..errors import DiscoveryError
from ..matching.discovery import discover_with_report
from ..models.discovery import CandidateReport
from ..models.request import MatchResult, ResourceRequest, WeightedProperty
from ..models.resource import ResourceRecord
from ..ontology.taxonomy import Taxonomy, load_taxonomy
from ..registry.repository import Repository, open_repository, to_information_table
from ..rough.table import InformationTable

logger = logging.getLogger(__name__)

router = APIRouter()


class BrokerState:
    """Immutable snapshot the routes read: taxonomy, repository and its table."""

    def __init__(self, settings: Settings, taxonomy: Taxonomy, repository: Repository):
        self.settings = settings
        self.taxonomy = taxonomy
        self.repository = repository
        self.table: InformationTable = to_information_table(repository, taxonomy.property_names())

    @classmethod
    def load(cls, settings: Settings, taxonomy: Optional[Taxonomy] = None) -> "BrokerState":
        taxonomy = taxonomy or load_taxonomy(settings.taxonomy_path)
        if settings.repository_path is None:
            repository = Repository()
        else:
            repository = open_repository(settings.repository_path, taxonomy)
        return cls(settings, taxonomy, repository)


class MatchRequest(BaseModel):
    """Request model for matching."""
    properties: List[WeightedProperty] = Field(..., min_length=1, description="Requested properties")
    algorithm: Optional[str] = Field(None, description="drsrd, classic or exact")
    threshold: Optional[float] = Field(None, ge=0.0, le=1.0, description="Minimum aggregate match degree")
    reduce: bool = Field(default=False, description="Drop dependent properties before approximation")


class MatchResponse(BaseModel):
    """Ranked resources for one request."""
    algorithm: str
    threshold: float
    results: List[MatchResult]
    report: Optional[CandidateReport] = None


def _broker(request: Request) -> BrokerState:
    return request.app.state.broker


@router.get("/resources", response_model=List[ResourceRecord])
async def list_resources(request: Request):
    """List advertised resources in registration order."""
    return list(_broker(request).repository.records)


@router.get("/resources/{resource_id}", response_model=ResourceRecord)
async def get_resource(resource_id: str, request: Request):
    """Get one advertised resource by ID."""
    try:
        return _broker(request).repository.get(resource_id)
    except DiscoveryError:
        raise HTTPException(status_code=404, detail="Resource not found")


@router.get("/taxonomy")
async def get_taxonomy(request: Request) -> Dict[str, Any]:
    """Classes and property definitions of the loaded taxonomy."""
    tax = _broker(request).taxonomy
    return {
        "root": tax.root,
        "classes": [node.model_dump() for node in tax.classes.values()],
        "properties": [prop.model_dump(mode="json") for prop in tax.properties.values()],
    }


@router.post("/match", response_model=MatchResponse)
async def match(body: MatchRequest, request: Request):
    """Rank resources against a weighted request."""
    broker = _broker(request)
    algorithm = body.algorithm or broker.settings.algorithm
    threshold = broker.settings.threshold if body.threshold is None else body.threshold
    try:
        resource_request = ResourceRequest(properties=tuple(body.properties))
        outcome = discover_with_report(
            broker.taxonomy, broker.table, resource_request, algorithm, threshold, reduce=body.reduce
        )
    except DiscoveryError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e))

    logger.info("Matched %d resources with %s", len(outcome.results), outcome.algorithm.value)
    return MatchResponse(
        algorithm=outcome.algorithm.value,
        threshold=outcome.threshold,
        results=outcome.results,
        report=outcome.report,
    )


@router.post("/reload")
async def reload_repository(request: Request):
    """Re-read the repository file, picking up registrations made since startup."""
    broker = _broker(request)
    if broker.settings.repository_path is None:
        raise HTTPException(status_code=400, detail="No repository file configured")
    try:
        fresh = BrokerState.load(broker.settings, broker.taxonomy)
    except DiscoveryError as e:
        raise HTTPException(status_code=400, detail=str(e))
    request.app.state.broker = fresh
    logger.info("Reloaded repository: %d resources", len(fresh.repository))
    return {"success": True, "resources": len(fresh.repository)}
