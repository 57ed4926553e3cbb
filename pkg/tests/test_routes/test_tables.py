#!/usr/bin/env python3
"""
test_tables.py - Tests for table, relation and proposition endpoints
"""

import pytest
from httpx import AsyncClient


@pytest.mark.asyncio
async def test_table1(client: AsyncClient):
    response = await client.get("/api/v1/tables/1")
    assert response.status_code == 200
    data = response.json()
    assert data["pass"] is True
    assert data["inputs"] == {"which": "1", "strict": True}
    assert all(cell["match"] for cell in data["cells"])


@pytest.mark.asyncio
async def test_unknown_table(client: AsyncClient):
    response = await client.get("/api/v1/tables/3")
    assert response.status_code == 404


@pytest.mark.asyncio
async def test_unknown_structure_relations(client: AsyncClient):
    response = await client.get("/api/v1/relations/L")
    assert response.status_code == 404


@pytest.mark.asyncio
async def test_proposition(client: AsyncClient):
    response = await client.get("/api/v1/propositions/8", params={"grid": 16})
    assert response.status_code == 200
    data = response.json()
    assert data["pass"] is True
    assert data["inputs"]["samples"] == 16


@pytest.mark.asyncio
async def test_proposition_failing(client: AsyncClient):
    response = await client.get("/api/v1/propositions/8", params={"grid": 16, "failing": True})
    assert response.status_code == 200
    assert response.json()["pass"] is False


@pytest.mark.asyncio
@pytest.mark.parametrize("params", [{"grid": 0}, {"tol": 0}, {"grid": "many"}])
async def test_proposition_query_validation(client: AsyncClient, params):
    response = await client.get("/api/v1/propositions/1", params=params)
    assert response.status_code == 422


@pytest.mark.asyncio
async def test_proposition_out_of_range(client: AsyncClient):
    response = await client.get("/api/v1/propositions/9")
    assert response.status_code == 422
    assert response.json()["error"] == "InvalidParameterError"
