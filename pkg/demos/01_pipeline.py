#!/usr/bin/env python3
"""Walk through the ingestion pipeline step by step on the bundled fixture:
parse both CSVs, link them, deduplicate, and normalize into feature vectors.
"""

from pathlib import Path

from chartlab.ingest import corpus_bounds, dedup, link, normalize, parse_billboard, parse_spotify

DATA = Path(__file__).parent.parent / "tests" / "data"

with open(DATA / "billboard.csv", newline="", encoding="utf-8") as handle:
    chart = parse_billboard(handle)
print(f"chart rows parsed: {len(chart.entries)}  (skipped {chart.skipped} malformed rows)")

with open(DATA / "spotify.csv", newline="", encoding="utf-8") as handle:
    tracks = parse_spotify(handle)
print(f"tracks parsed: {len(tracks.tracks)}  (rejected {tracks.rejected} rows)")

linked = link(chart.entries, tracks.tracks)
print(f"linked candidates: {len(linked.candidates)}  "
      f"(chart songs without features: {linked.unmatched})")

deduped = dedup(linked.candidates)
print(f"after dedup: {len(deduped)}  (removed {len(linked.candidates) - len(deduped)})")

bounds = corpus_bounds(deduped)
print(f"tempo range: {bounds.tempo_min:.1f}..{bounds.tempo_max:.1f} bpm, "
      f"loudness range: {bounds.loudness_min:.1f}..{bounds.loudness_max:.1f} dB")

records = normalize(deduped, bounds)
sample = records[0]
print(f"\nexample record: {sample.title!r} by {sample.artist}")
print(f"  peak {sample.peak_position}, {sample.weeks_on_chart} weeks on chart, "
      f"best weekly rank {sample.best_weekly_rank}")
print(f"  raw tempo {sample.raw.tempo:.1f} bpm, key {sample.raw.key}")
print(f"  normalized vector {[round(x, 3) for x in sample.normalized]}")
