"""Read-only query layer over a built catalog.

Rankings and tables use raw feature values (tempo stays in BPM); clustering
and taste matching use the normalized vectors. Tie order everywhere is title
then artist, case-folded, so results are stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

from .errors import UnknownClusterError, UnknownSortColumnError
from .features import DISPLAY_FEATURES
from .ingest import SongRecord, normalize_key

if TYPE_CHECKING:
    from .catalog import Catalog

MEGA_HIT_MAX_PEAK = 10
MEGA_HIT_MIN_WEEKS = 50  # strictly more than this many weeks

SORT_COLUMNS: tuple[str, ...] = (
    "title",
    "artist",
    "release_year",
    "peak_position",
    "weeks_on_chart",
) + DISPLAY_FEATURES

_TEXT_COLUMNS = ("title", "artist")


@dataclass(frozen=True)
class MegaHit:
    song_id: str
    release_year: int
    peak_position: int
    weeks_on_chart: int
    cluster_id: int


def raw_feature(song: SongRecord, feature: str) -> float:
    """Raw display value of a feature (tempo in BPM)."""
    if feature not in DISPLAY_FEATURES:
        raise ValueError(
            f"unknown feature {feature!r}; expected one of {', '.join(DISPLAY_FEATURES)}"
        )
    return float(getattr(song.raw, feature))


def _title_artist_key(song: SongRecord) -> tuple[str, str]:
    return normalize_key(song.title), normalize_key(song.artist)


def number_one_songs(catalog: "Catalog") -> list[SongRecord]:
    """All songs whose best weekly rank is 1, ordered by title then artist."""
    ones = [song for song in catalog.songs if song.best_weekly_rank == 1]
    return sorted(ones, key=_title_artist_key)


def rank_by_feature(catalog: "Catalog", feature: str, descending: bool = True) -> list[str]:
    """Song ids totally ordered by raw feature value; value ties break by
    title then artist."""
    def key(song: SongRecord):
        value = raw_feature(song, feature)
        return (-value if descending else value, *_title_artist_key(song))

    return [song.id for song in sorted(catalog.songs, key=key)]


def top_n(catalog: "Catalog", feature: str, n: int) -> list[SongRecord]:
    """The n songs with the highest raw value of the feature."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return [catalog.songs_by_id[sid] for sid in rank_by_feature(catalog, feature)[:n]]


def mega_hits(catalog: "Catalog") -> list[MegaHit]:
    """Songs that peaked inside the top 10 and spent strictly more than 50
    weeks on the chart, ordered by title then artist."""
    hits = []
    for song in sorted(catalog.songs, key=_title_artist_key):
        if song.peak_position <= MEGA_HIT_MAX_PEAK and song.weeks_on_chart > MEGA_HIT_MIN_WEEKS:
            hits.append(
                MegaHit(
                    song_id=song.id,
                    release_year=song.release_year,
                    peak_position=song.peak_position,
                    weeks_on_chart=song.weeks_on_chart,
                    cluster_id=catalog.cluster_of[song.id],
                )
            )
    return hits


def search_songs(catalog: "Catalog", query: str = "", sort_column: str = "title",
                 descending: bool = False, cluster_id: int | None = None) -> list[SongRecord]:
    """Case-insensitive substring search over title or artist, stably sorted
    by one column; cluster_id restricts the search to one cluster's members."""
    if sort_column not in SORT_COLUMNS:
        raise UnknownSortColumnError(sort_column, SORT_COLUMNS)

    if cluster_id is None:
        pool = catalog.songs
    else:
        if cluster_id not in {cluster.id for cluster in catalog.clusters}:
            raise UnknownClusterError(cluster_id)
        pool = [song for song in catalog.songs if catalog.cluster_of[song.id] == cluster_id]

    needle = normalize_key(query)
    matches = [
        song for song in pool
        if needle in normalize_key(song.title) or needle in normalize_key(song.artist)
    ]

    key: Callable[[SongRecord], object]
    if sort_column in _TEXT_COLUMNS:
        key = lambda song: normalize_key(getattr(song, sort_column))  # noqa: E731
    elif sort_column in DISPLAY_FEATURES:
        key = lambda song: raw_feature(song, sort_column)  # noqa: E731
    else:
        key = lambda song: getattr(song, sort_column)  # noqa: E731
    return sorted(matches, key=key, reverse=descending)
