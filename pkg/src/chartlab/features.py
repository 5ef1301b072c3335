"""Feature-space definitions shared across the pipeline, the model, and the API.

The clustering model works on a fixed six-component vector; the UI-facing
endpoints expose only five of those features (key is clusterable but not
displayed).
"""

from __future__ import annotations

# Order of the components inside every normalized feature vector.
# key and tempo enter the vector in normalized form ([0, 1]).
VECTOR_FEATURES: tuple[str, ...] = (
    "acousticness",
    "danceability",
    "energy",
    "key",
    "tempo",
    "valence",
)

# Features shown in rankings, tables and radar charts.
DISPLAY_FEATURES: tuple[str, ...] = (
    "acousticness",
    "danceability",
    "energy",
    "tempo",
    "valence",
)

FEATURE_LABELS: dict[str, str] = {
    "acousticness": "Acousticness",
    "danceability": "Danceability",
    "energy": "Energy",
    "key": "Key",
    "tempo": "Tempo",
    "valence": "Valence",
}

# One distinguishable color token per display feature.
FEATURE_COLORS: dict[str, str] = {
    "acousticness": "#66c2a5",
    "danceability": "#fc8d62",
    "energy": "#e78ac3",
    "tempo": "#8da0cb",
    "valence": "#a6d854",
}

# Pastel rainbow used for cluster identity, left to right.
CLUSTER_PALETTE: tuple[str, ...] = (
    "#ffd6a5",
    "#fdffb6",
    "#caffbf",
    "#a0c4ff",
    "#bdb2ff",
)


def vector_index(feature: str) -> int:
    """Position of a feature inside the normalized vector."""
    try:
        return VECTOR_FEATURES.index(feature)
    except ValueError:
        raise ValueError(
            f"unknown feature {feature!r}; expected one of {', '.join(VECTOR_FEATURES)}"
        ) from None
