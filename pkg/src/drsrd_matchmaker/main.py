"""
Main application entry point for the DRSRD Broker.
"""

import logging
from contextlib import asynccontextmanager
from typing import Optional

from fastapi import FastAPI

from . import __version__
from .api.routes import BrokerState
from .api.routes import router as api_router
from .config import Settings, configure_logging

logger = logging.getLogger(__name__)


def create_app(settings: Optional[Settings] = None) -> FastAPI:
    """Create and configure the FastAPI application."""

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        """Application lifespan manager."""
        # Startup
        resolved = settings or Settings.from_env()
        configure_logging(resolved.log_level)
        logger.info("🚀 Starting DRSRD Broker...")
        app.state.broker = BrokerState.load(resolved)
        logger.info(
            "Taxonomy %s, %d resources, default algorithm %s",
            resolved.taxonomy_path, len(app.state.broker.repository), resolved.algorithm,
        )
        yield
        # Shutdown
        logger.info("Shutting down DRSRD Broker...")

    app = FastAPI(
        title="DRSRD Broker",
        description="Resource discovery over dynamic rough sets with ontology-based matchmaking",
        version=__version__,
        lifespan=lifespan,
    )

    app.include_router(api_router, prefix="/api")

    @app.get("/health")
    async def health_check():
        """Health check endpoint."""
        broker = getattr(app.state, "broker", None)
        return {
            "status": "healthy",
            "message": "DRSRD Broker is running",
            "resources": len(broker.repository) if broker else 0,
        }

    return app


app = create_app()

if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
