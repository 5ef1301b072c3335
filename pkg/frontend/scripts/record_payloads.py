#!/usr/bin/env python3
"""Record fixture-server payloads into tests/fixtures/payloads.json.

The frontend unit tests stub fetch() with these exact bodies, so every number
they assert against came out of the real API.
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from chartlab.catalog import build_catalog
from chartlab.server import create_app

FRONTEND = Path(__file__).parent.parent
REPO = FRONTEND.parent
OUT = FRONTEND / "tests" / "fixtures" / "payloads.json"

FEATURES = ("acousticness", "danceability", "energy", "tempo", "valence")


def main() -> None:
    with open(REPO / "tests" / "data" / "billboard.csv", newline="", encoding="utf-8") as bb, \
            open(REPO / "tests" / "data" / "spotify.csv", newline="", encoding="utf-8") as sp:
        catalog = build_catalog(bb, sp)
    client = TestClient(create_app(catalog))

    payloads: dict[str, object] = {}

    def record(path: str) -> dict:
        response = client.get(path)
        assert response.status_code == 200, path
        payloads[f"GET {path}"] = response.json()
        return response.json()

    record("/api/features")
    for feature in FEATURES:
        record(f"/api/number-ones?sort={feature}&order=desc")
    record("/api/clusters")
    for cluster_id in range(5):
        record(f"/api/clusters/{cluster_id}")
    record("/api/megahits")
    survey = record("/api/survey")

    # song-table queries the tests drive
    for query in (
        "search=&sort=title&order=asc&cluster=0",
        "search=&sort=title&order=asc&cluster=1",
        "search=&sort=title&order=asc&cluster=2",
        "search=&sort=title&order=asc&cluster=3",
        "search=&sort=title&order=asc&cluster=4",
        "search=golden&sort=title&order=asc&cluster=2",
        "search=&sort=weeks_on_chart&order=asc&cluster=2",
    ):
        record(f"/api/songs?{query}")

    # survey submissions: all four picks drawn from one cluster's column
    for cluster_id in range(5):
        picks = [
            next(o["song_id"] for o in q["options"] if o["cluster_id"] == cluster_id)
            for q in survey["questions"]
        ]
        response = client.post("/api/survey", json={"chosen_song_ids": picks})
        assert response.status_code == 200
        # compact separators so the key equals JS JSON.stringify(picks)
        payloads[f"POST /api/survey {json.dumps(picks, separators=(',', ':'))}"] = response.json()

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(payloads, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"recorded {len(payloads)} payloads to {OUT}")


if __name__ == "__main__":
    main()
