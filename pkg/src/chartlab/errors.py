"""Exception types raised by the library."""

from __future__ import annotations


class ChartLabError(Exception):
    """Base class for every error this package raises on purpose."""


class SchemaError(ChartLabError):
    """A source CSV is empty or missing a required header column."""


class DegenerateCorpusError(ChartLabError):
    """Min-max normalization is impossible because min == max over the corpus."""


class LabelConfigError(ChartLabError):
    """Cluster label configuration does not fit the clustering result."""


class UnknownSongError(ChartLabError):
    """A song id does not resolve to any record in the catalog."""

    def __init__(self, song_id: str):
        super().__init__(f"unknown song id {song_id!r}")
        self.song_id = song_id


class UnknownClusterError(ChartLabError):
    """A cluster id does not exist in the catalog."""

    def __init__(self, cluster_id: object):
        super().__init__(f"unknown cluster id {cluster_id!r}")
        self.cluster_id = cluster_id


class UnknownSortColumnError(ChartLabError):
    """A song-table sort column name is not supported."""

    def __init__(self, column: str, valid: tuple[str, ...]):
        super().__init__(f"unknown sort column {column!r}; valid columns: {', '.join(valid)}")
        self.column = column
        self.valid = valid


class ZeroVectorError(ChartLabError):
    """Cosine similarity was asked for a zero-length vector."""


class SurveyError(ChartLabError):
    """A survey definition or survey response is malformed."""
