"""CSV ingestion: parse the chart and track-feature sources, link, dedup, normalize.

Two input schemas are supported out of the box (the public Billboard Hot 100
1999-2019 dump and the Spotify 160k-track audio-feature dump); every column
name can be remapped through a small INI file, see `load_column_maps`.
Malformed rows are skipped and counted rather than aborting the run, because
real chart exports are dirty.
"""

from __future__ import annotations

import ast
import configparser
import csv
import hashlib
import math
from dataclasses import dataclass, field
from datetime import date, datetime
from typing import IO, Iterable, Mapping, Sequence

from .errors import DegenerateCorpusError, SchemaError

# Features whose source domain is already [0, 1].
UNIT_FEATURES = ("acousticness", "danceability", "energy", "valence")

# Values this close outside [0, 1] are clamped instead of rejected.
BOUND_TOLERANCE = 1e-9

MAX_KEY = 11  # pitch classes 0..11


# ---------------------------------------------------------------------------
# column mappings

@dataclass(frozen=True)
class BillboardColumns:
    """Column names of the chart CSV. Defaults match the Kaggle 1999-2019 dump."""

    title: str = "Name"
    artist: str = "Artists"
    weekly_rank: str = "Weekly.rank"
    week_date: str = "Week"
    # Optional columns; when absent the values are derived from weekly rows.
    peak_position: str = "Peak.position"
    weeks_on_chart: str = "Weeks.on.chart"


@dataclass(frozen=True)
class SpotifyColumns:
    """Column names of the audio-feature CSV. Defaults match the Kaggle 160k dump."""

    title: str = "name"
    artist: str = "artists"
    year: str = "year"
    acousticness: str = "acousticness"
    danceability: str = "danceability"
    energy: str = "energy"
    valence: str = "valence"
    key: str = "key"
    loudness: str = "loudness"
    tempo: str = "tempo"
    # 0/1 columns kept on the record but never clustered.
    binary: tuple[str, ...] = ("explicit", "mode")
    # Optional columns.
    album_image_url: str = "album_image_url"
    youtube_url: str = "youtube_url"


def load_column_maps(path: str) -> tuple[BillboardColumns, SpotifyColumns]:
    """Read column-name overrides from an INI file.

    Recognized sections are [billboard] and [spotify]; keys are the field
    names of `BillboardColumns` / `SpotifyColumns`. The spotify `binary` key
    takes a comma-separated list. Missing keys keep their defaults.
    """
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise SchemaError(f"cannot read column map file {path!r}")

    def section(name: str) -> dict[str, str]:
        return dict(parser[name]) if parser.has_section(name) else {}

    bb_kwargs = section("billboard")
    sp_kwargs = section("spotify")
    unknown_bb = set(bb_kwargs) - set(BillboardColumns.__dataclass_fields__)
    unknown_sp = set(sp_kwargs) - set(SpotifyColumns.__dataclass_fields__)
    if unknown_bb or unknown_sp:
        raise SchemaError(f"unknown column map keys: {sorted(unknown_bb | unknown_sp)}")
    if "binary" in sp_kwargs:
        sp_kwargs["binary"] = tuple(  # type: ignore[assignment]
            part.strip() for part in sp_kwargs["binary"].split(",") if part.strip()
        )
    return BillboardColumns(**bb_kwargs), SpotifyColumns(**sp_kwargs)  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# domain types

@dataclass(frozen=True)
class ChartEntry:
    """One weekly chart row."""

    song_title: str
    artist: str
    weekly_rank: int
    week_date: date
    peak_position: int
    weeks_on_chart: int


@dataclass(frozen=True)
class TrackFeatures:
    """Audio features of one track as parsed from the feature CSV."""

    song_title: str
    artist: str
    release_year: int
    acousticness: float
    danceability: float
    energy: float
    valence: float
    key: int
    loudness: float
    tempo: float
    binary: Mapping[str, int] = field(default_factory=dict)
    album_image_url: str | None = None
    youtube_url: str | None = None


@dataclass(frozen=True)
class Candidate:
    """A chart song linked to its track features, before dedup/normalization."""

    title: str
    artist: str
    best_weekly_rank: int
    peak_position: int
    weeks_on_chart: int
    raw: TrackFeatures


@dataclass(frozen=True)
class SongRecord:
    """One deduplicated song with chart stats and raw + normalized features."""

    id: str
    title: str
    artist: str
    release_year: int
    album_image_url: str | None
    youtube_url: str | None
    peak_position: int
    weeks_on_chart: int
    best_weekly_rank: int
    raw: TrackFeatures
    normalized: tuple[float, float, float, float, float, float]
    loudness_norm: float


@dataclass(frozen=True)
class CorpusBounds:
    """Corpus-wide min/max used for min-max feature normalization."""

    tempo_min: float
    tempo_max: float
    loudness_min: float
    loudness_max: float


@dataclass
class ChartParse:
    entries: list[ChartEntry]
    skipped: int


@dataclass
class TrackParse:
    tracks: list[TrackFeatures]
    rejected: int


@dataclass
class LinkResult:
    candidates: list[Candidate]
    unmatched: int  # distinct chart songs without a feature match


# ---------------------------------------------------------------------------
# identity helpers

def normalize_key(text: str) -> str:
    """Case-fold, trim, and collapse internal whitespace."""
    return " ".join(text.split()).casefold()


def song_key(title: str, artist: str) -> tuple[str, str]:
    return normalize_key(title), normalize_key(artist)


def song_id(title: str, artist: str) -> str:
    """Stable opaque id derived from the normalized (title, artist) key."""
    norm_title, norm_artist = song_key(title, artist)
    digest = hashlib.sha1(f"{norm_title}\x1f{norm_artist}".encode()).hexdigest()
    return digest[:12]


# ---------------------------------------------------------------------------
# parsing

def _open_reader(stream: IO[str], source: str) -> csv.DictReader:
    reader = csv.DictReader(stream)
    if reader.fieldnames is None:
        raise SchemaError(f"{source} CSV is empty")
    return reader


def _require_columns(fieldnames: Sequence[str], required: dict[str, str], source: str) -> None:
    missing = [f"{column!r} ({logical})" for logical, column in required.items()
               if column not in fieldnames]
    if missing:
        raise SchemaError(f"{source} CSV is missing required column(s): {', '.join(missing)}")


def _parse_week(value: str) -> date | None:
    value = value.strip()
    try:
        return date.fromisoformat(value)
    except ValueError:
        pass
    for fmt in ("%m/%d/%Y", "%Y/%m/%d", "%d-%m-%Y"):
        try:
            return datetime.strptime(value, fmt).date()
        except ValueError:
            continue
    return None


def _parse_int(value: str | None) -> int | None:
    if value is None:
        return None
    try:
        return int(value.strip())
    except ValueError:
        return None


def parse_billboard(stream: IO[str], columns: BillboardColumns | None = None) -> ChartParse:
    """Parse weekly chart rows. Rows with an unusable rank, date, title or
    artist are skipped and counted; a missing required header is fatal."""
    columns = columns or BillboardColumns()
    reader = _open_reader(stream, "billboard")
    assert reader.fieldnames is not None
    _require_columns(
        reader.fieldnames,
        {
            "title": columns.title,
            "artist": columns.artist,
            "weekly_rank": columns.weekly_rank,
            "week_date": columns.week_date,
        },
        "billboard",
    )
    has_peak = columns.peak_position in reader.fieldnames
    has_weeks = columns.weeks_on_chart in reader.fieldnames

    entries: list[ChartEntry] = []
    skipped = 0
    for row in reader:
        title = (row.get(columns.title) or "").strip()
        artist = (row.get(columns.artist) or "").strip()
        rank = _parse_int(row.get(columns.weekly_rank))
        week = _parse_week(row.get(columns.week_date) or "")
        if not title or not artist or rank is None or not 1 <= rank <= 100 or week is None:
            skipped += 1
            continue
        peak = _parse_int(row.get(columns.peak_position)) if has_peak else None
        if peak is None or not 1 <= peak <= 100:
            peak = rank
        weeks = _parse_int(row.get(columns.weeks_on_chart)) if has_weeks else None
        if weeks is None or weeks < 1:
            weeks = 1
        entries.append(ChartEntry(title, artist, rank, week, peak, weeks))
    return ChartParse(entries, skipped)


def _clean_artist(value: str) -> str:
    """Undo the stringified-list artist format some dumps use, e.g. "['Drake']"."""
    value = value.strip()
    if value.startswith("[") and value.endswith("]"):
        try:
            parsed = ast.literal_eval(value)
        except (ValueError, SyntaxError):
            return value.strip("[]'\" ")
        if isinstance(parsed, (list, tuple)):
            return ", ".join(str(item).strip() for item in parsed)
    return value


def _parse_unit(value: str | None) -> float | None:
    """Parse a [0, 1] feature; clamp values within BOUND_TOLERANCE of a bound."""
    if value is None:
        return None
    try:
        number = float(value)
    except ValueError:
        return None
    if not math.isfinite(number):
        return None
    if number < 0.0:
        if number >= -BOUND_TOLERANCE:
            return 0.0
        return None
    if number > 1.0:
        if number <= 1.0 + BOUND_TOLERANCE:
            return 1.0
        return None
    return number


def _parse_float(value: str | None) -> float | None:
    if value is None:
        return None
    try:
        number = float(value)
    except ValueError:
        return None
    return number if math.isfinite(number) else None


def parse_spotify(stream: IO[str], columns: SpotifyColumns | None = None) -> TrackParse:
    """Parse track feature rows. Rows with out-of-domain features are rejected
    and counted; a missing required header is fatal."""
    columns = columns or SpotifyColumns()
    reader = _open_reader(stream, "spotify")
    assert reader.fieldnames is not None
    required = {
        "title": columns.title,
        "artist": columns.artist,
        "year": columns.year,
        "acousticness": columns.acousticness,
        "danceability": columns.danceability,
        "energy": columns.energy,
        "valence": columns.valence,
        "key": columns.key,
        "loudness": columns.loudness,
        "tempo": columns.tempo,
    }
    _require_columns(reader.fieldnames, required, "spotify")
    binary_columns = [name for name in columns.binary if name in reader.fieldnames]
    has_image = columns.album_image_url in reader.fieldnames
    has_youtube = columns.youtube_url in reader.fieldnames

    tracks: list[TrackFeatures] = []
    rejected = 0
    for row in reader:
        title = (row.get(columns.title) or "").strip()
        artist = _clean_artist(row.get(columns.artist) or "")
        year = _parse_int(row.get(columns.year))
        values = {name: _parse_unit(row.get(getattr(columns, name))) for name in UNIT_FEATURES}
        key = _parse_float(row.get(columns.key))
        loudness = _parse_float(row.get(columns.loudness))
        tempo = _parse_float(row.get(columns.tempo))

        ok = (
            bool(title)
            and bool(artist)
            and year is not None
            and all(v is not None for v in values.values())
            and key is not None and key.is_integer() and 0 <= key <= MAX_KEY
            and loudness is not None
            and tempo is not None and tempo > 0
        )
        binary: dict[str, int] = {}
        if ok:
            for name in binary_columns:
                flag = _parse_float(row.get(name))
                if flag is None or flag not in (0.0, 1.0):
                    ok = False
                    break
                binary[name] = int(flag)
        if not ok:
            rejected += 1
            continue

        image = (row.get(columns.album_image_url) or "").strip() if has_image else ""
        youtube = (row.get(columns.youtube_url) or "").strip() if has_youtube else ""
        tracks.append(
            TrackFeatures(
                song_title=title,
                artist=artist,
                release_year=year,
                acousticness=values["acousticness"],  # type: ignore[arg-type]
                danceability=values["danceability"],  # type: ignore[arg-type]
                energy=values["energy"],  # type: ignore[arg-type]
                valence=values["valence"],  # type: ignore[arg-type]
                key=int(key),  # type: ignore[arg-type]
                loudness=loudness,  # type: ignore[arg-type]
                tempo=tempo,  # type: ignore[arg-type]
                binary=binary,
                album_image_url=image or None,
                youtube_url=youtube or None,
            )
        )
    return TrackParse(tracks, rejected)


# ---------------------------------------------------------------------------
# linking, dedup, normalization

def link(entries: Iterable[ChartEntry], tracks: Iterable[TrackFeatures]) -> LinkResult:
    """Join chart songs to their track features.

    Chart rows are grouped by the literal (title, artist) pair; each group is
    matched against the track index by the normalized key. Matched groups
    become candidates carrying peak position (best weekly rank over the
    group's rows) and weeks on chart (count of distinct week dates).
    """
    track_index: dict[tuple[str, str], TrackFeatures] = {}
    for track in tracks:
        track_index.setdefault(song_key(track.song_title, track.artist), track)

    groups: dict[tuple[str, str], list[ChartEntry]] = {}
    for entry in entries:
        groups.setdefault((entry.song_title, entry.artist), []).append(entry)

    candidates: list[Candidate] = []
    unmatched = 0
    for (title, artist), rows in groups.items():
        track = track_index.get(song_key(title, artist))
        if track is None:
            unmatched += 1
            continue
        best_rank = min(row.weekly_rank for row in rows)
        weeks = len({row.week_date for row in rows})
        candidates.append(
            Candidate(
                title=title,
                artist=artist,
                best_weekly_rank=best_rank,
                peak_position=best_rank,
                weeks_on_chart=weeks,
                raw=track,
            )
        )
    return LinkResult(candidates, unmatched)


def dedup(candidates: Iterable[Candidate]) -> list[Candidate]:
    """Keep one candidate per normalized (title, artist) key.

    The survivor is the candidate with the best (numerically smallest) weekly
    rank; ties go to the earliest release year, then to input order.
    """
    best: dict[tuple[str, str], Candidate] = {}
    for candidate in candidates:
        key = song_key(candidate.title, candidate.artist)
        current = best.get(key)
        if (
            current is None
            or candidate.best_weekly_rank < current.best_weekly_rank
            or (
                candidate.best_weekly_rank == current.best_weekly_rank
                and candidate.raw.release_year < current.raw.release_year
            )
        ):
            best[key] = candidate
    return list(best.values())


def corpus_bounds(candidates: Sequence[Candidate]) -> CorpusBounds:
    """Min/max of tempo and loudness over the deduplicated corpus."""
    if len(candidates) < 2:
        raise DegenerateCorpusError("need at least 2 songs to normalize the corpus")
    tempos = [c.raw.tempo for c in candidates]
    loudnesses = [c.raw.loudness for c in candidates]
    bounds = CorpusBounds(min(tempos), max(tempos), min(loudnesses), max(loudnesses))
    if bounds.tempo_min == bounds.tempo_max:
        raise DegenerateCorpusError("all songs share one tempo; min-max normalization undefined")
    if bounds.loudness_min == bounds.loudness_max:
        raise DegenerateCorpusError("all songs share one loudness; min-max normalization undefined")
    return bounds


def normalize(candidates: Sequence[Candidate], bounds: CorpusBounds | None = None) -> list[SongRecord]:
    """Fill normalized feature vectors and assign stable song ids.

    key maps through its fixed 0..11 domain; tempo and loudness are min-max
    scaled over the corpus; the four unit features are copied verbatim.
    Loudness is normalized too but stays outside the clustering vector.
    """
    bounds = bounds or corpus_bounds(candidates)
    tempo_span = bounds.tempo_max - bounds.tempo_min
    loudness_span = bounds.loudness_max - bounds.loudness_min
    records = []
    for candidate in candidates:
        raw = candidate.raw
        vector = (
            raw.acousticness,
            raw.danceability,
            raw.energy,
            raw.key / MAX_KEY,
            (raw.tempo - bounds.tempo_min) / tempo_span,
            raw.valence,
        )
        records.append(
            SongRecord(
                id=song_id(candidate.title, candidate.artist),
                title=candidate.title,
                artist=candidate.artist,
                release_year=raw.release_year,
                album_image_url=raw.album_image_url,
                youtube_url=raw.youtube_url,
                peak_position=candidate.peak_position,
                weeks_on_chart=candidate.weeks_on_chart,
                best_weekly_rank=candidate.best_weekly_rank,
                raw=raw,
                normalized=vector,
                loudness_norm=(raw.loudness - bounds.loudness_min) / loudness_span,
            )
        )
    return records
