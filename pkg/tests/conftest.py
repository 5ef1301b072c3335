"""Shared fixtures: the bundled fixture corpus, a built catalog, an API client,
and a schema registry for response validation."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from chartlab.catalog import Catalog, build_catalog
from chartlab.server import create_app

TESTS_DIR = Path(__file__).parent
DATA_DIR = TESTS_DIR / "data"
SCHEMAS_DIR = TESTS_DIR.parent / "docs" / "schemas"

BILLBOARD_CSV = DATA_DIR / "billboard.csv"
SPOTIFY_CSV = DATA_DIR / "spotify.csv"


@pytest.fixture(scope="session")
def billboard_path() -> Path:
    return BILLBOARD_CSV


@pytest.fixture(scope="session")
def spotify_path() -> Path:
    return SPOTIFY_CSV


@pytest.fixture(scope="session")
def fixture_catalog() -> Catalog:
    with open(BILLBOARD_CSV, encoding="utf-8", newline="") as bb, \
            open(SPOTIFY_CSV, encoding="utf-8", newline="") as sp:
        return build_catalog(bb, sp)


@pytest.fixture(scope="session")
def client(fixture_catalog: Catalog) -> TestClient:
    return TestClient(create_app(fixture_catalog))


@pytest.fixture(scope="session")
def schema_validator():
    """Returns validate(schema_name, instance) backed by docs/schemas/."""
    import jsonschema
    from referencing import Registry, Resource

    resources = []
    for path in SCHEMAS_DIR.glob("*.schema.json"):
        schema = json.loads(path.read_text(encoding="utf-8"))
        resources.append((path.name, Resource.from_contents(schema)))
    registry = Registry().with_resources(resources)

    def validate(schema_name: str, instance) -> None:
        schema = json.loads((SCHEMAS_DIR / schema_name).read_text(encoding="utf-8"))
        validator = jsonschema.Draft202012Validator(schema, registry=registry)
        validator.validate(instance)

    return validate


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    lines = {}
    for outcome in ("passed", "failed", "error", "skipped"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" in str(nodeid):
                if getattr(report, "when", "call") not in ("call", "setup"):
                    continue
                name = str(nodeid).split("::")[-1]
                # setup-phase passes are not test outcomes
                if outcome == "passed" and report.when != "call":
                    continue
                lines[name] = outcome.upper()
    if lines:
        terminalreporter.section("acceptance criteria")
        for name in sorted(lines):
            terminalreporter.write_line(f"{name}: {lines[name]}")
