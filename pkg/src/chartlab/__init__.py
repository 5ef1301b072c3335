"""chartlab: chart analytics over audio features.

Fuses weekly chart history with per-track audio features, clusters the songs
with k-means, matches listener taste to a cluster from a four-song survey,
and serves every derived view over a JSON API.
"""

from .catalog import Catalog, build_catalog, load_catalog, recluster, save_catalog
from .cluster import Cluster, ClusteringResult, KMeansConfig, cluster_profile, kmeans, \
    label_clusters
from .features import DISPLAY_FEATURES, VECTOR_FEATURES
from .ingest import ChartEntry, SongRecord, TrackFeatures, dedup, link, normalize, \
    parse_billboard, parse_spotify
from .taste import SurveyDefinition, SurveyResponse, TasteResult, assign_cluster, \
    cosine_similarity, evaluate_response, generate_survey, mean_vector

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "ChartEntry",
    "Cluster",
    "ClusteringResult",
    "DISPLAY_FEATURES",
    "KMeansConfig",
    "SongRecord",
    "SurveyDefinition",
    "SurveyResponse",
    "TasteResult",
    "TrackFeatures",
    "VECTOR_FEATURES",
    "assign_cluster",
    "build_catalog",
    "cluster_profile",
    "cosine_similarity",
    "dedup",
    "evaluate_response",
    "generate_survey",
    "kmeans",
    "label_clusters",
    "link",
    "load_catalog",
    "mean_vector",
    "normalize",
    "parse_billboard",
    "parse_spotify",
    "recluster",
    "save_catalog",
]
