"""Taste matching: turn four survey picks into a cluster assignment.

The chosen songs' feature vectors are averaged into one mean vector, which is
compared against every cluster's mean vector with cosine similarity; the user
is assigned the most similar cluster.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from .errors import SurveyError, UnknownSongError, ZeroVectorError
from .ingest import normalize_key

if TYPE_CHECKING:
    from .catalog import Catalog
    from .cluster import Cluster

QUESTIONS = 4
OPTIONS_PER_QUESTION = 5


@dataclass(frozen=True)
class SurveyOption:
    song_id: str
    title: str
    artist: str
    youtube_url: str | None
    cluster_id: int


@dataclass(frozen=True)
class SurveyQuestion:
    prompt: str
    options: tuple[SurveyOption, ...]


@dataclass(frozen=True)
class SurveyDefinition:
    questions: tuple[SurveyQuestion, ...]


@dataclass(frozen=True)
class SurveyResponse:
    chosen_song_ids: tuple[str, ...]


@dataclass(frozen=True)
class TasteResult:
    mean_vector: tuple[float, ...]
    similarities: tuple[float, ...]  # indexed by cluster id
    assigned_cluster: int


def mean_vector(song_ids: Iterable[str], catalog: "Catalog") -> np.ndarray:
    """Component-wise mean of the songs' normalized feature vectors."""
    vectors = []
    for song_id in song_ids:
        song = catalog.songs_by_id.get(song_id)
        if song is None:
            raise UnknownSongError(song_id)
        vectors.append(song.normalized)
    if not vectors:
        raise ValueError("mean_vector needs at least one song id")
    return np.asarray(vectors, dtype=float).mean(axis=0)


def cosine_similarity(a: Sequence[float] | np.ndarray, b: Sequence[float] | np.ndarray) -> float:
    """dot(a, b) / (|a| * |b|); raises ZeroVectorError when a norm is zero."""
    va = np.asarray(a, dtype=float)
    vb = np.asarray(b, dtype=float)
    norm_a = float(np.sqrt((va * va).sum()))
    norm_b = float(np.sqrt((vb * vb).sum()))
    if norm_a == 0.0 or norm_b == 0.0:
        raise ZeroVectorError("cosine similarity is undefined for a zero vector")
    return float(va @ vb) / (norm_a * norm_b)


def assign_cluster(mean: Sequence[float] | np.ndarray, clusters: Sequence["Cluster"]) -> TasteResult:
    """Compare the mean vector against every cluster mean; argmax similarity
    wins, exact ties going to the lowest cluster id."""
    if not clusters:
        raise ValueError("assign_cluster needs at least one cluster")
    similarity_by_id = {
        cluster.id: cosine_similarity(mean, cluster.centroid) for cluster in clusters
    }
    assigned = -1
    best = -np.inf
    for cluster_id in sorted(similarity_by_id):
        if similarity_by_id[cluster_id] > best:
            assigned = cluster_id
            best = similarity_by_id[cluster_id]
    return TasteResult(
        mean_vector=tuple(float(x) for x in np.asarray(mean, dtype=float)),
        similarities=tuple(similarity_by_id[cid] for cid in sorted(similarity_by_id)),
        assigned_cluster=assigned,
    )


# ---------------------------------------------------------------------------
# survey definitions

def generate_survey(catalog: "Catalog") -> SurveyDefinition:
    """Build the default survey from a catalog: four questions, each offering
    one song per cluster, drawing the longest-charting (most recognizable)
    members first."""
    picks: dict[int, list] = {}
    for cluster in catalog.clusters:
        members = sorted(
            (catalog.songs_by_id[sid] for sid in cluster.member_ids),
            key=lambda s: (-s.weeks_on_chart, s.peak_position, normalize_key(s.title)),
        )
        if len(members) < QUESTIONS:
            raise SurveyError(
                f"cluster {cluster.id} has only {len(members)} songs; "
                f"{QUESTIONS} are needed to fill the survey"
            )
        picks[cluster.id] = members[:QUESTIONS]

    questions = []
    for index in range(QUESTIONS):
        options = tuple(
            SurveyOption(
                song_id=picks[cid][index].id,
                title=picks[cid][index].title,
                artist=picks[cid][index].artist,
                youtube_url=picks[cid][index].youtube_url,
                cluster_id=cid,
            )
            for cid in sorted(picks)
        )
        questions.append(SurveyQuestion(prompt="Pick the song you like best", options=options))
    return SurveyDefinition(questions=tuple(questions))


def validate_survey(survey: SurveyDefinition, catalog: "Catalog") -> None:
    """Check the 4x5 shape and that each question offers exactly one song per
    cluster, with song ids resolving to actual members of those clusters."""
    if len(survey.questions) != QUESTIONS:
        raise SurveyError(f"survey must have {QUESTIONS} questions, found {len(survey.questions)}")
    cluster_ids = {cluster.id for cluster in catalog.clusters}
    for number, question in enumerate(survey.questions, start=1):
        if len(question.options) != OPTIONS_PER_QUESTION:
            raise SurveyError(
                f"question {number} must offer {OPTIONS_PER_QUESTION} songs, "
                f"found {len(question.options)}"
            )
        seen = {option.cluster_id for option in question.options}
        if seen != cluster_ids:
            raise SurveyError(
                f"question {number} must offer one song from each cluster "
                f"{sorted(cluster_ids)}, found {sorted(seen)}"
            )
        for option in question.options:
            song = catalog.songs_by_id.get(option.song_id)
            if song is None:
                raise SurveyError(f"question {number} references unknown song {option.song_id!r}")
            if catalog.cluster_of[option.song_id] != option.cluster_id:
                raise SurveyError(
                    f"question {number}: song {option.song_id!r} is not in cluster "
                    f"{option.cluster_id}"
                )


def evaluate_response(survey: SurveyDefinition,
                      response: SurveyResponse | Sequence[str],
                      catalog: "Catalog") -> TasteResult:
    """Validate the picks against the survey and assign a cluster."""
    chosen = tuple(response.chosen_song_ids) if isinstance(response, SurveyResponse) else tuple(response)
    if len(chosen) != len(survey.questions):
        raise SurveyError(f"expected {len(survey.questions)} chosen songs, got {len(chosen)}")
    for index, (song_id, question) in enumerate(zip(chosen, survey.questions), start=1):
        if song_id not in {option.song_id for option in question.options}:
            raise SurveyError(f"song {song_id!r} is not an option of question {index}")
    return assign_cluster(mean_vector(chosen, catalog), catalog.clusters)


def survey_to_dict(survey: SurveyDefinition) -> dict:
    return {
        "questions": [
            {
                "prompt": question.prompt,
                "options": [
                    {
                        "song_id": option.song_id,
                        "title": option.title,
                        "artist": option.artist,
                        "youtube_url": option.youtube_url,
                        "cluster_id": option.cluster_id,
                    }
                    for option in question.options
                ],
            }
            for question in survey.questions
        ]
    }


def survey_from_dict(data: dict) -> SurveyDefinition:
    try:
        questions = tuple(
            SurveyQuestion(
                prompt=question["prompt"],
                options=tuple(
                    SurveyOption(
                        song_id=option["song_id"],
                        title=option["title"],
                        artist=option["artist"],
                        youtube_url=option.get("youtube_url"),
                        cluster_id=option["cluster_id"],
                    )
                    for option in question["options"]
                ),
            )
            for question in data["questions"]
        )
    except (KeyError, TypeError) as exc:
        raise SurveyError(f"malformed survey definition: {exc}") from exc
    return SurveyDefinition(questions=questions)


def load_survey(path: str) -> SurveyDefinition:
    with open(path, encoding="utf-8") as handle:
        return survey_from_dict(json.load(handle))


def save_survey(survey: SurveyDefinition, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(survey_to_dict(survey), handle, indent=2, ensure_ascii=False)
        handle.write("\n")
