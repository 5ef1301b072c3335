"""K-means over song feature vectors: k-means++ seeding, Lloyd iterations,
deterministic restarts, and name/color binding for the resulting clusters."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import TYPE_CHECKING, Mapping, Sequence

import numpy as np

from .errors import LabelConfigError
from .features import CLUSTER_PALETTE, VECTOR_FEATURES

if TYPE_CHECKING:
    from .catalog import Catalog


@dataclass(frozen=True)
class KMeansConfig:
    k: int = 5
    seed: int = 42
    max_iterations: int = 300
    tolerance: float = 1e-6  # on total centroid movement per iteration
    restarts: int = 10


@dataclass(frozen=True)
class Cluster:
    id: int
    name: str
    color: str
    centroid: tuple[float, ...]
    member_ids: tuple[str, ...]
    fun_fact: str


@dataclass(frozen=True, eq=False)
class ClusteringResult:
    clusters: tuple[Cluster, ...]
    inertia: float
    iterations_run: int
    seed_used: int
    # point index -> cluster index, for the winning restart
    labels: np.ndarray
    # inertia after each assignment step of the winning restart
    inertia_history: tuple[float, ...]


@dataclass
class LloydRun:
    centroids: np.ndarray
    labels: np.ndarray
    inertia: float
    iterations: int
    inertia_history: tuple[float, ...]


def _nearest(points: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    # argmin resolves distance ties to the lowest centroid index
    distances = ((points[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
    return distances.argmin(axis=1)


def _inertia(points: np.ndarray, centroids: np.ndarray, labels: np.ndarray) -> float:
    return float(((points - centroids[labels]) ** 2).sum())


def _updated_centroids(points: np.ndarray, labels: np.ndarray, previous: np.ndarray) -> np.ndarray:
    """Member means; an emptied cluster is re-seeded with the point farthest
    from its assigned centroid (ties to the lowest point index)."""
    k = previous.shape[0]
    counts = np.bincount(labels, minlength=k)
    sums = np.zeros_like(previous)
    np.add.at(sums, labels, points)
    centroids = previous.copy()
    occupied = counts > 0
    centroids[occupied] = sums[occupied] / counts[occupied, None]

    empty = np.flatnonzero(~occupied)
    if empty.size:
        residual = ((points - previous[labels]) ** 2).sum(axis=1)
        farthest_first = np.argsort(-residual, kind="stable")
        taken = 0
        for cluster_index in empty:
            centroids[cluster_index] = points[farthest_first[taken]]
            taken += 1
    return centroids


def plus_plus_init(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    """k-means++ seeding: sample each next centroid with probability
    proportional to the squared distance to the nearest chosen one."""
    n = points.shape[0]
    centroids = np.empty((k, points.shape[1]), dtype=float)
    centroids[0] = points[int(rng.integers(n))]
    closest_sq = ((points - centroids[0]) ** 2).sum(axis=1)
    for i in range(1, k):
        total = closest_sq.sum()
        if total <= 0.0:
            index = int(rng.integers(n))
        else:
            cumulative = np.cumsum(closest_sq / total)
            index = min(int(np.searchsorted(cumulative, rng.random(), side="right")), n - 1)
        centroids[i] = points[index]
        closest_sq = np.minimum(closest_sq, ((points - centroids[i]) ** 2).sum(axis=1))
    return centroids


def lloyd(points: np.ndarray, initial_centroids: np.ndarray,
          max_iterations: int = 300, tolerance: float = 1e-6) -> LloydRun:
    """One Lloyd run from the given centroids.

    Stops when the assignment reaches a fixed point, when total centroid
    movement drops to `tolerance`, or at `max_iterations`. The recorded
    inertia sequence is non-increasing by construction.
    """
    centroids = np.array(initial_centroids, dtype=float)
    labels = _nearest(points, centroids)
    history = [_inertia(points, centroids, labels)]
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        new_centroids = _updated_centroids(points, labels, centroids)
        shift = np.sqrt(((new_centroids - centroids) ** 2).sum(axis=1)).sum()
        centroids = new_centroids
        new_labels = _nearest(points, centroids)
        history.append(_inertia(points, centroids, new_labels))
        if np.array_equal(new_labels, labels):
            break
        labels = new_labels
        if shift <= tolerance:
            break
    return LloydRun(centroids, labels, history[-1], iterations, tuple(history))


def kmeans(points: Sequence[Sequence[float]] | np.ndarray,
           config: KMeansConfig | None = None,
           point_ids: Sequence[str] | None = None) -> ClusteringResult:
    """Cluster the points with restarted k-means; the restart with the lowest
    inertia wins, ties going to the earlier restart. Deterministic given the
    seed. Final centroids are the exact member means of the final assignment.
    """
    config = config or KMeansConfig()
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2:
        raise ValueError(f"points must be a 2-D array, got shape {pts.shape}")
    if not np.isfinite(pts).all():
        raise ValueError("points contain a non-finite component")
    n = pts.shape[0]
    if config.k < 1:
        raise ValueError("k must be positive")
    if n < config.k:
        raise ValueError(f"need at least k={config.k} points, got {n}")
    if point_ids is not None and len(point_ids) != n:
        raise ValueError("point_ids length does not match points")

    best: LloydRun | None = None
    for restart in range(config.restarts):
        rng = np.random.default_rng((config.seed, restart))
        run = lloyd(pts, plus_plus_init(pts, config.k, rng),
                    config.max_iterations, config.tolerance)
        if best is None or run.inertia < best.inertia:
            best = run
    assert best is not None

    ids = list(point_ids) if point_ids is not None else [str(i) for i in range(n)]
    centroids = np.array(best.centroids)
    clusters = []
    for j in range(config.k):
        members = np.flatnonzero(best.labels == j)
        if members.size:
            centroids[j] = pts[members].mean(axis=0)
        clusters.append(
            Cluster(
                id=j,
                name="",
                color="",
                centroid=tuple(float(x) for x in centroids[j]),
                member_ids=tuple(ids[i] for i in members),
                fun_fact="",
            )
        )
    return ClusteringResult(
        clusters=tuple(clusters),
        inertia=_inertia(pts, centroids, best.labels),
        iterations_run=best.iterations,
        seed_used=config.seed,
        labels=best.labels,
        inertia_history=best.inertia_history,
    )


def cluster_profile(cluster: Cluster, catalog: "Catalog") -> np.ndarray:
    """Component-wise mean of the member songs' feature vectors."""
    if not cluster.member_ids:
        raise ValueError(f"cluster {cluster.id} has no members to profile")
    vectors = np.array([catalog.songs_by_id[sid].normalized for sid in cluster.member_ids])
    return vectors.mean(axis=0)


# ---------------------------------------------------------------------------
# label binding

@dataclass(frozen=True)
class ClusterLabel:
    name: str
    color: str
    fun_fact: str
    marker: str = ""  # feature whose highest centroid value claims this label


@dataclass(frozen=True)
class LabelConfig:
    labels: tuple[ClusterLabel, ...]
    mode: str = "marker"  # "marker" or "rank"
    rank_feature: str = "energy"


DEFAULT_LABEL_CONFIG = LabelConfig(
    labels=(
        ClusterLabel(
            "Acoustic Life", CLUSTER_PALETTE[0],
            "Unplugged at heart: these songs lean on real instruments and quiet rooms.",
            "acousticness",
        ),
        ClusterLabel(
            "Positive Vibes Only", CLUSTER_PALETTE[1],
            "The sunniest corner of the chart; valence here is off the scale.",
            "valence",
        ),
        ClusterLabel(
            "All About That BASS", CLUSTER_PALETTE[2],
            "Maximum energy. If your speakers survive, play it louder.",
            "energy",
        ),
        ClusterLabel(
            "Karaoke Please", CLUSTER_PALETTE[3],
            "Danceable crowd-pleasers that everybody already knows the words to.",
            "danceability",
        ),
        ClusterLabel(
            "All About That Treble", CLUSTER_PALETTE[4],
            "Pitched high and wound tight; the top end of the keyboard lives here.",
            "key",
        ),
    ),
)


def load_label_config(path: str) -> LabelConfig:
    """Load a label config JSON: {"mode": ..., "rank_feature": ...,
    "labels": [{"name", "color", "fun_fact", "marker"}, ...]}."""
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    try:
        labels = tuple(
            ClusterLabel(
                name=entry["name"],
                color=entry["color"],
                fun_fact=entry.get("fun_fact", ""),
                marker=entry.get("marker", ""),
            )
            for entry in data["labels"]
        )
    except (KeyError, TypeError) as exc:
        raise LabelConfigError(f"malformed label config {path!r}: {exc}") from exc
    return LabelConfig(
        labels=labels,
        mode=data.get("mode", "marker"),
        rank_feature=data.get("rank_feature", "energy"),
    )


def label_clusters(result: ClusteringResult, label_config: LabelConfig | None = None) -> list[Cluster]:
    """Bind one label to each cluster and re-id clusters 0..k-1 in label order.

    marker mode walks the labels in config order and gives each the unbound
    cluster whose centroid is highest on the label's marker feature; rank mode
    sorts clusters by one feature and applies labels in listed order. Both are
    deterministic (centroid ties go to the lower original cluster index).
    """
    config = label_config or DEFAULT_LABEL_CONFIG
    clusters = list(result.clusters)
    if len(config.labels) != len(clusters):
        raise LabelConfigError(
            f"{len(config.labels)} labels configured for {len(clusters)} clusters"
        )

    if config.mode == "rank":
        axis = _marker_axis(config.rank_feature)
        ordered = sorted(clusters, key=lambda c: (-c.centroid[axis], c.id))
    elif config.mode == "marker":
        ordered = []
        unbound = list(clusters)
        for label in config.labels:
            axis = _marker_axis(label.marker)
            pick = min(unbound, key=lambda c: (-c.centroid[axis], c.id))
            ordered.append(pick)
            unbound.remove(pick)
    else:
        raise LabelConfigError(f"unknown label binding mode {config.mode!r}")

    return [
        Cluster(
            id=index,
            name=label.name,
            color=label.color,
            centroid=cluster.centroid,
            member_ids=cluster.member_ids,
            fun_fact=label.fun_fact,
        )
        for index, (label, cluster) in enumerate(zip(config.labels, ordered))
    ]


def _marker_axis(feature: str) -> int:
    if feature not in VECTOR_FEATURES:
        raise LabelConfigError(
            f"unknown marker feature {feature!r}; expected one of {', '.join(VECTOR_FEATURES)}"
        )
    return VECTOR_FEATURES.index(feature)
