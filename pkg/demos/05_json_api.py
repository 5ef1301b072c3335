#!/usr/bin/env python3
"""Exercise the HTTP JSON API end to end without opening a port, using the
in-process test client against an app built from the fixture corpus."""

from pathlib import Path

from fastapi.testclient import TestClient

from chartlab.catalog import build_catalog
from chartlab.server import create_app

DATA = Path(__file__).parent.parent / "tests" / "data"

with open(DATA / "billboard.csv", newline="", encoding="utf-8") as bb, \
        open(DATA / "spotify.csv", newline="", encoding="utf-8") as sp:
    catalog = build_catalog(bb, sp)

client = TestClient(create_app(catalog))

features = client.get("/api/features").json()["features"]
print("features:", ", ".join(f["label"] for f in features))

ones = client.get("/api/number-ones", params={"sort": "tempo", "order": "desc"}).json()
lead = ones["songs"][0]
print(f"\n{ones['count']} No.1 songs; fastest: {lead['title']} "
      f"({lead['features']['tempo']:.1f} bpm)")

clusters = client.get("/api/clusters").json()["clusters"]
print("\nclusters:")
for cluster in clusters:
    print(f"  [{cluster['id']}] {cluster['name']:<22} {cluster['size']} songs")

survey = client.get("/api/survey").json()
picks = [question["options"][0]["song_id"] for question in survey["questions"]]
result = client.post("/api/survey", json={"chosen_song_ids": picks}).json()
assigned = result["cluster"]
print(f"\nsurvey picks (first option each) land in: {assigned['name']}")
print(f"similarities: {[round(s, 3) for s in result['similarities']]}")

rows = client.get("/api/songs", params={"search": "night", "sort": "peak_position",
                                        "order": "asc"}).json()
print(f"\nsearch 'night': {rows['count']} songs, best peak first")
for row in rows["songs"][:3]:
    print(f"  peak {row['peak_position']:>2}  {row['title']} - {row['artist']}")
