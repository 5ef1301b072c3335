#!/usr/bin/env python3
"""Simulate the four-question taste survey: average the picked songs' vectors
and assign the closest cluster by cosine similarity."""

from pathlib import Path

from chartlab.catalog import build_catalog
from chartlab.taste import evaluate_response, generate_survey

DATA = Path(__file__).parent.parent / "tests" / "data"

with open(DATA / "billboard.csv", newline="", encoding="utf-8") as bb, \
        open(DATA / "spotify.csv", newline="", encoding="utf-8") as sp:
    catalog = build_catalog(bb, sp)

survey = generate_survey(catalog)
print("the survey:")
for number, question in enumerate(survey.questions, start=1):
    print(f"\n  Q{number}. {question.prompt}")
    for option in question.options:
        print(f"     [{option.cluster_id}] {option.title} - {option.artist}")

# a listener who always picks the high-energy option
picks = [
    next(option.song_id for option in question.options if option.cluster_id == 2)
    for question in survey.questions
]
result = evaluate_response(survey, picks, catalog)

print("\npicks (all from the high-energy column):")
print(f"  mean vector {[round(x, 3) for x in result.mean_vector]}")
for cluster in catalog.clusters:
    marker = "  <-- assigned" if cluster.id == result.assigned_cluster else ""
    print(f"  similarity to {cluster.name:<22} {result.similarities[cluster.id]:.4f}{marker}")
