"""HTTP JSON API over a built catalog, plus static asset serving for the UI.

Every endpoint is a read-only view of the immutable catalog; POST /api/survey
is stateless (same body, same response). Errors use one JSON shape:
{"code": ..., "message": ...}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import analytics
from .catalog import Catalog, build_catalog, load_catalog
from .cluster import Cluster, KMeansConfig, cluster_profile, load_label_config
from .errors import SurveyError, UnknownClusterError, UnknownSongError, UnknownSortColumnError
from .features import DISPLAY_FEATURES, FEATURE_COLORS, FEATURE_LABELS, vector_index
from .ingest import SongRecord, load_column_maps
from .taste import SurveyDefinition, evaluate_response, generate_survey, load_survey, \
    survey_to_dict, validate_survey


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class SurveyPostBody(BaseModel):
    chosen_song_ids: list[str]


def _song_row(song: SongRecord, cluster_id: int) -> dict:
    features = {name: analytics.raw_feature(song, name) for name in DISPLAY_FEATURES}
    features_norm = {name: song.normalized[vector_index(name)] for name in DISPLAY_FEATURES}
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
        "cluster_id": cluster_id,
        "features": features,
        "features_norm": features_norm,
    }


def _cluster_detail(catalog: Catalog, cluster: Cluster) -> dict:
    profile = cluster_profile(cluster, catalog)
    return {
        "id": cluster.id,
        "name": cluster.name,
        "color": cluster.color,
        "fun_fact": cluster.fun_fact,
        "size": len(cluster.member_ids),
        "centroid": list(cluster.centroid),
        "profile": [float(value) for value in profile],
        "members": [
            _song_row(catalog.songs_by_id[song_id], cluster.id)
            for song_id in sorted(
                cluster.member_ids,
                key=lambda sid: (catalog.songs_by_id[sid].title.casefold(),
                                 catalog.songs_by_id[sid].artist.casefold()),
            )
        ],
    }


def _parse_order(order: str) -> bool:
    if order not in ("asc", "desc"):
        raise ApiError(400, "invalid_order", f"order must be 'asc' or 'desc', got {order!r}")
    return order == "desc"


def _check_feature(feature: str) -> str:
    if feature not in DISPLAY_FEATURES:
        raise ApiError(
            400, "invalid_feature",
            f"unknown feature {feature!r}; valid features: {', '.join(DISPLAY_FEATURES)}",
        )
    return feature


def create_app(catalog: Catalog, survey: SurveyDefinition | None = None,
               static_dir: str | None = None) -> FastAPI:
    """Wire the API around one immutable catalog."""
    survey = survey or generate_survey(catalog)
    validate_survey(survey, catalog)
    clusters_by_id = {cluster.id: cluster for cluster in catalog.clusters}

    app = FastAPI(title="chartlab", docs_url=None, redoc_url=None)

    @app.exception_handler(ApiError)
    async def handle_api_error(_request: Request, exc: ApiError) -> JSONResponse:
        return JSONResponse(status_code=exc.status,
                            content={"code": exc.code, "message": exc.message})

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(_request: Request,
                                      exc: RequestValidationError) -> JSONResponse:
        return JSONResponse(status_code=400,
                            content={"code": "invalid_request", "message": str(exc.errors())})

    @app.get("/api/features")
    def list_features() -> dict:
        return {
            "features": [
                {"key": name, "label": FEATURE_LABELS[name], "color": FEATURE_COLORS[name]}
                for name in DISPLAY_FEATURES
            ]
        }

    @app.get("/api/number-ones")
    def number_ones(sort: str = "acousticness", order: str = "desc") -> dict:
        feature = _check_feature(sort)
        descending = _parse_order(order)
        wanted = {song.id for song in analytics.number_one_songs(catalog)}
        ordered = [sid for sid in analytics.rank_by_feature(catalog, feature, descending)
                   if sid in wanted]
        return {
            "sort": feature,
            "order": order,
            "count": len(ordered),
            "songs": [_song_row(catalog.songs_by_id[sid], catalog.cluster_of[sid])
                      for sid in ordered],
        }

    @app.get("/api/songs/top")
    def top_songs(feature: str = "acousticness", n: int = 5) -> dict:
        feature = _check_feature(feature)
        if n < 1:
            raise ApiError(400, "invalid_n", "n must be at least 1")
        rows = [
            {
                "id": song.id,
                "title": song.title,
                "artist": song.artist,
                "album_image_url": song.album_image_url,
                "value": analytics.raw_feature(song, feature),
            }
            for song in analytics.top_n(catalog, feature, n)
        ]
        return {"feature": feature, "n": n, "rows": rows}

    @app.get("/api/clusters")
    def list_clusters() -> dict:
        return {
            "clusters": [
                {
                    "id": cluster.id,
                    "name": cluster.name,
                    "color": cluster.color,
                    "size": len(cluster.member_ids),
                    "centroid": list(cluster.centroid),
                }
                for cluster in catalog.clusters
            ]
        }

    @app.get("/api/clusters/{cluster_id}")
    def cluster_detail(cluster_id: int) -> dict:
        cluster = clusters_by_id.get(cluster_id)
        if cluster is None:
            raise ApiError(404, "unknown_cluster", f"no cluster with id {cluster_id}")
        return _cluster_detail(catalog, cluster)

    @app.get("/api/megahits")
    def megahits() -> dict:
        rows = []
        for hit in analytics.mega_hits(catalog):
            song = catalog.songs_by_id[hit.song_id]
            cluster = clusters_by_id[hit.cluster_id]
            rows.append(
                {
                    "song_id": hit.song_id,
                    "title": song.title,
                    "artist": song.artist,
                    "release_year": hit.release_year,
                    "peak_position": hit.peak_position,
                    "weeks_on_chart": hit.weeks_on_chart,
                    "cluster_id": hit.cluster_id,
                    "cluster_name": cluster.name,
                    "cluster_color": cluster.color,
                }
            )
        return {"megahits": rows}

    @app.get("/api/survey")
    def get_survey() -> dict:
        return survey_to_dict(survey)

    @app.post("/api/survey")
    def post_survey(body: SurveyPostBody) -> dict:
        try:
            result = evaluate_response(survey, body.chosen_song_ids, catalog)
        except (SurveyError, UnknownSongError) as exc:
            raise ApiError(400, "invalid_survey_response", str(exc)) from exc
        return {
            "mean_vector": list(result.mean_vector),
            "similarities": list(result.similarities),
            "assigned_cluster": result.assigned_cluster,
            "cluster": _cluster_detail(catalog, clusters_by_id[result.assigned_cluster]),
        }

    @app.get("/api/songs")
    def songs(search: str = "", sort: str = "title", order: str = "asc",
              cluster: int | None = None) -> dict:
        descending = _parse_order(order)
        try:
            matches = analytics.search_songs(catalog, search, sort, descending, cluster)
        except UnknownSortColumnError as exc:
            raise ApiError(400, "invalid_sort_column", str(exc)) from exc
        except UnknownClusterError as exc:
            raise ApiError(404, "unknown_cluster", str(exc)) from exc
        return {
            "count": len(matches),
            "songs": [_song_row(song, catalog.cluster_of[song.id]) for song in matches],
        }

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")
    else:
        @app.get("/")
        def index() -> dict:
            return {
                "service": "chartlab",
                "endpoints": [
                    "/api/features", "/api/number-ones", "/api/songs/top", "/api/clusters",
                    "/api/clusters/{id}", "/api/megahits", "/api/survey", "/api/songs",
                ],
            }

    return app


# ---------------------------------------------------------------------------
# server configuration

@dataclass(frozen=True)
class ServerConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    catalog_path: str | None = None
    billboard_path: str | None = None
    spotify_path: str | None = None
    columns_path: str | None = None
    survey_path: str | None = None
    labels_path: str | None = None
    static_dir: str | None = None
    k: int = 5
    seed: int = 42

    def __post_init__(self) -> None:
        have_catalog = self.catalog_path is not None
        have_csvs = self.billboard_path is not None and self.spotify_path is not None
        if have_catalog == have_csvs:
            raise ValueError(
                "provide either a catalog path or both CSV paths, not neither/both"
            )


def app_from_config(config: ServerConfig) -> FastAPI:
    """Load (or build on boot) the catalog and assemble the app."""
    if config.catalog_path is not None:
        catalog = load_catalog(config.catalog_path)
    else:
        billboard_columns = spotify_columns = None
        if config.columns_path:
            billboard_columns, spotify_columns = load_column_maps(config.columns_path)
        labels = load_label_config(config.labels_path) if config.labels_path else None
        assert config.billboard_path is not None and config.spotify_path is not None
        with open(config.billboard_path, encoding="utf-8", newline="") as bb, \
                open(config.spotify_path, encoding="utf-8", newline="") as sp:
            catalog = build_catalog(
                bb, sp,
                billboard_columns=billboard_columns,
                spotify_columns=spotify_columns,
                kmeans_config=KMeansConfig(k=config.k, seed=config.seed),
                label_config=labels,
            )
    survey = load_survey(config.survey_path) if config.survey_path else None
    return create_app(catalog, survey=survey, static_dir=config.static_dir)


def run(config: ServerConfig) -> None:
    import uvicorn

    uvicorn.run(app_from_config(config), host=config.host, port=config.port)
