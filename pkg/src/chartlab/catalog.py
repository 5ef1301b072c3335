"""The immutable post-pipeline dataset and its JSON serialization.

`build_catalog` runs the full batch pipeline (parse, link, dedup, normalize,
cluster, label) single-threaded; the resulting Catalog never changes, so it
is safe for unsynchronized concurrent reads. Serialization uses a fixed field
order so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO

import numpy as np

from . import ingest
from .cluster import Cluster, KMeansConfig, LabelConfig, kmeans, label_clusters
from .ingest import CorpusBounds, SongRecord, TrackFeatures

CATALOG_VERSION = 1


@dataclass(frozen=True)
class PipelineReport:
    """Row/song counts surfaced by the build, for sanity checks and the CLI."""

    billboard_rows: int
    billboard_skipped: int
    spotify_rows: int
    spotify_rejected: int
    chart_songs: int
    unmatched_chart_songs: int
    matched_candidates: int
    duplicates_removed: int
    songs_total: int


@dataclass(frozen=True)
class ClusteringMeta:
    k: int
    seed: int
    restarts: int
    max_iterations: int
    tolerance: float
    inertia: float
    iterations_run: int


@dataclass
class Catalog:
    songs: list[SongRecord]  # sorted by (title, artist) key
    clusters: list[Cluster]  # ids 0..k-1 in label order
    bounds: CorpusBounds
    clustering: ClusteringMeta
    report: PipelineReport
    songs_by_id: dict[str, SongRecord] = field(init=False, repr=False)
    cluster_of: dict[str, int] = field(init=False, repr=False)
    number_one_ids: frozenset[str] = field(init=False, repr=False)
    mega_hit_ids: frozenset[str] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.songs_by_id = {song.id: song for song in self.songs}
        self.cluster_of = {
            song_id: cluster.id for cluster in self.clusters for song_id in cluster.member_ids
        }
        self.number_one_ids = frozenset(
            song.id for song in self.songs if song.best_weekly_rank == 1
        )
        self.mega_hit_ids = frozenset(
            song.id for song in self.songs
            if song.peak_position <= 10 and song.weeks_on_chart > 50
        )


def build_catalog(billboard_stream: IO[str], spotify_stream: IO[str], *,
                  billboard_columns: ingest.BillboardColumns | None = None,
                  spotify_columns: ingest.SpotifyColumns | None = None,
                  kmeans_config: KMeansConfig | None = None,
                  label_config: LabelConfig | None = None) -> Catalog:
    """Run the whole pipeline over the two CSV streams."""
    chart = ingest.parse_billboard(billboard_stream, billboard_columns)
    feature_parse = ingest.parse_spotify(spotify_stream, spotify_columns)
    linked = ingest.link(chart.entries, feature_parse.tracks)
    deduped = ingest.dedup(linked.candidates)
    bounds = ingest.corpus_bounds(deduped)
    records = ingest.normalize(deduped, bounds)
    records.sort(key=lambda r: (ingest.normalize_key(r.title), ingest.normalize_key(r.artist)))

    config = kmeans_config or KMeansConfig()
    result = kmeans(
        np.array([record.normalized for record in records]),
        config,
        point_ids=[record.id for record in records],
    )
    clusters = label_clusters(result, label_config)

    report = PipelineReport(
        billboard_rows=len(chart.entries),
        billboard_skipped=chart.skipped,
        spotify_rows=len(feature_parse.tracks),
        spotify_rejected=feature_parse.rejected,
        chart_songs=len(linked.candidates) + linked.unmatched,
        unmatched_chart_songs=linked.unmatched,
        matched_candidates=len(linked.candidates),
        duplicates_removed=len(linked.candidates) - len(deduped),
        songs_total=len(records),
    )
    meta = ClusteringMeta(
        k=config.k,
        seed=result.seed_used,
        restarts=config.restarts,
        max_iterations=config.max_iterations,
        tolerance=config.tolerance,
        inertia=result.inertia,
        iterations_run=result.iterations_run,
    )
    return Catalog(songs=records, clusters=clusters, bounds=bounds,
                   clustering=meta, report=report)


def recluster(catalog: Catalog, kmeans_config: KMeansConfig | None = None,
              label_config: LabelConfig | None = None) -> Catalog:
    """Re-run clustering over an already built catalog's vectors."""
    config = kmeans_config or KMeansConfig()
    result = kmeans(
        np.array([song.normalized for song in catalog.songs]),
        config,
        point_ids=[song.id for song in catalog.songs],
    )
    clusters = label_clusters(result, label_config)
    meta = ClusteringMeta(
        k=config.k,
        seed=result.seed_used,
        restarts=config.restarts,
        max_iterations=config.max_iterations,
        tolerance=config.tolerance,
        inertia=result.inertia,
        iterations_run=result.iterations_run,
    )
    return Catalog(songs=list(catalog.songs), clusters=clusters, bounds=catalog.bounds,
                   clustering=meta, report=catalog.report)


# ---------------------------------------------------------------------------
# serialization (field order below is the wire format; keep it stable)

def _song_to_dict(song: SongRecord) -> dict:
    raw = song.raw
    return {
        "id": song.id,
        "title": song.title,
        "artist": song.artist,
        "release_year": song.release_year,
        "album_image_url": song.album_image_url,
        "youtube_url": song.youtube_url,
        "peak_position": song.peak_position,
        "weeks_on_chart": song.weeks_on_chart,
        "best_weekly_rank": song.best_weekly_rank,
        "features": {
            "acousticness": raw.acousticness,
            "danceability": raw.danceability,
            "energy": raw.energy,
            "valence": raw.valence,
            "key": raw.key,
            "loudness": raw.loudness,
            "tempo": raw.tempo,
            "binary": {name: raw.binary[name] for name in sorted(raw.binary)},
        },
        "normalized": list(song.normalized),
        "loudness_norm": song.loudness_norm,
    }


def _song_from_dict(data: dict) -> SongRecord:
    features = data["features"]
    raw = TrackFeatures(
        song_title=data["title"],
        artist=data["artist"],
        release_year=data["release_year"],
        acousticness=features["acousticness"],
        danceability=features["danceability"],
        energy=features["energy"],
        valence=features["valence"],
        key=features["key"],
        loudness=features["loudness"],
        tempo=features["tempo"],
        binary=dict(features["binary"]),
        album_image_url=data["album_image_url"],
        youtube_url=data["youtube_url"],
    )
    return SongRecord(
        id=data["id"],
        title=data["title"],
        artist=data["artist"],
        release_year=data["release_year"],
        album_image_url=data["album_image_url"],
        youtube_url=data["youtube_url"],
        peak_position=data["peak_position"],
        weeks_on_chart=data["weeks_on_chart"],
        best_weekly_rank=data["best_weekly_rank"],
        raw=raw,
        normalized=tuple(data["normalized"]),
        loudness_norm=data["loudness_norm"],
    )


def catalog_to_dict(catalog: Catalog) -> dict:
    return {
        "version": CATALOG_VERSION,
        "clustering": {
            "k": catalog.clustering.k,
            "seed": catalog.clustering.seed,
            "restarts": catalog.clustering.restarts,
            "max_iterations": catalog.clustering.max_iterations,
            "tolerance": catalog.clustering.tolerance,
            "inertia": catalog.clustering.inertia,
            "iterations_run": catalog.clustering.iterations_run,
        },
        "normalization": {
            "tempo_min": catalog.bounds.tempo_min,
            "tempo_max": catalog.bounds.tempo_max,
            "loudness_min": catalog.bounds.loudness_min,
            "loudness_max": catalog.bounds.loudness_max,
        },
        "report": {
            "billboard_rows": catalog.report.billboard_rows,
            "billboard_skipped": catalog.report.billboard_skipped,
            "spotify_rows": catalog.report.spotify_rows,
            "spotify_rejected": catalog.report.spotify_rejected,
            "chart_songs": catalog.report.chart_songs,
            "unmatched_chart_songs": catalog.report.unmatched_chart_songs,
            "matched_candidates": catalog.report.matched_candidates,
            "duplicates_removed": catalog.report.duplicates_removed,
            "songs_total": catalog.report.songs_total,
        },
        "clusters": [
            {
                "id": cluster.id,
                "name": cluster.name,
                "color": cluster.color,
                "fun_fact": cluster.fun_fact,
                "centroid": list(cluster.centroid),
                "member_ids": list(cluster.member_ids),
            }
            for cluster in catalog.clusters
        ],
        "songs": [_song_to_dict(song) for song in catalog.songs],
    }


def catalog_from_dict(data: dict) -> Catalog:
    clustering = data["clustering"]
    normalization = data["normalization"]
    report = data["report"]
    return Catalog(
        songs=[_song_from_dict(entry) for entry in data["songs"]],
        clusters=[
            Cluster(
                id=entry["id"],
                name=entry["name"],
                color=entry["color"],
                centroid=tuple(entry["centroid"]),
                member_ids=tuple(entry["member_ids"]),
                fun_fact=entry["fun_fact"],
            )
            for entry in data["clusters"]
        ],
        bounds=CorpusBounds(
            tempo_min=normalization["tempo_min"],
            tempo_max=normalization["tempo_max"],
            loudness_min=normalization["loudness_min"],
            loudness_max=normalization["loudness_max"],
        ),
        clustering=ClusteringMeta(
            k=clustering["k"],
            seed=clustering["seed"],
            restarts=clustering["restarts"],
            max_iterations=clustering["max_iterations"],
            tolerance=clustering["tolerance"],
            inertia=clustering["inertia"],
            iterations_run=clustering["iterations_run"],
        ),
        report=PipelineReport(**report),
    )


def catalog_to_json(catalog: Catalog) -> str:
    return json.dumps(catalog_to_dict(catalog), indent=2, ensure_ascii=False) + "\n"


def save_catalog(catalog: Catalog, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(catalog_to_json(catalog))


def load_catalog(path: str) -> Catalog:
    with open(path, encoding="utf-8") as handle:
        return catalog_from_dict(json.load(handle))
