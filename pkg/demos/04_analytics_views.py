#!/usr/bin/env python3
"""Tour the derived views the UI consumes: No.1 songs, per-feature rankings,
top-5 tables, the mega-hit set, and the searchable song table."""

from pathlib import Path

from chartlab import analytics
from chartlab.catalog import build_catalog

DATA = Path(__file__).parent.parent / "tests" / "data"

with open(DATA / "billboard.csv", newline="", encoding="utf-8") as bb, \
        open(DATA / "spotify.csv", newline="", encoding="utf-8") as sp:
    catalog = build_catalog(bb, sp)

ones = analytics.number_one_songs(catalog)
print(f"songs that reached No.1: {len(ones)}")

print("\ntop 5 by tempo:")
for song in analytics.top_n(catalog, "tempo", 5):
    print(f"  {song.raw.tempo:7.2f} bpm  {song.title} - {song.artist}")

hits = analytics.mega_hits(catalog)
print(f"\nmega-hits (peak <= 10 and more than 50 weeks): {len(hits)}")
for hit in hits[:5]:
    song = catalog.songs_by_id[hit.song_id]
    print(f"  peak {hit.peak_position:>2}, {hit.weeks_on_chart} weeks, "
          f"{hit.release_year}: {song.title}")

ranking = analytics.rank_by_feature(catalog, "valence", descending=True)
happiest = catalog.songs_by_id[ranking[0]]
gloomiest = catalog.songs_by_id[ranking[-1]]
print(f"\nhighest valence: {happiest.title} ({happiest.raw.valence:.3f})")
print(f"lowest valence:  {gloomiest.title} ({gloomiest.raw.valence:.3f})")

results = analytics.search_songs(catalog, query="golden", sort_column="weeks_on_chart",
                                 descending=True)
print(f"\nsearch 'golden', longest charting first ({len(results)} matches):")
for song in results[:5]:
    print(f"  {song.weeks_on_chart:>3} weeks  {song.title} - {song.artist}")
