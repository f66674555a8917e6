#!/usr/bin/env python3
"""
Simple script to run the DRSRD Broker.

Configuration comes from DRSRD_* environment variables or a .env file:
DRSRD_TAXONOMY, DRSRD_REPOSITORY, DRSRD_ALGORITHM, DRSRD_THRESHOLD, DRSRD_LOG_LEVEL.
"""

import uvicorn

if __name__ == "__main__":
    print("🚀 Starting DRSRD Broker...")
    print("📡 Match endpoint: POST http://localhost:8000/api/match")
    print("🛑 Press Ctrl+C to stop the server")
    print("-" * 50)

    uvicorn.run(
        "drsrd_matchmaker.main:app",
        app_dir="src",
        host="0.0.0.0",
        port=8000,
        reload=True,
        log_level="info"
    )
