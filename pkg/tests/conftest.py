#!/usr/bin/env python3
"""
conftest.py - Pytest configuration and fixtures
"""

import random
from collections.abc import AsyncGenerator

import pytest
from httpx import ASGITransport, AsyncClient
from hypothesis import HealthCheck, settings as hypothesis_settings

from monge_ampere_complex.main import app
from monge_ampere_complex.services.complex_structures import STRUCTURE_NAMES, builtin

hypothesis_settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
hypothesis_settings.load_profile("default")


@pytest.fixture(scope="function")
async def client() -> AsyncGenerator[AsyncClient, None]:
    """Create test HTTP client."""
    async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
        yield client


@pytest.fixture(params=STRUCTURE_NAMES)
def structure(request):
    """Each built-in compatible complex structure."""
    return builtin(request.param)


@pytest.fixture
def structure_j():
    return builtin("J")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240101)

