/** Payload types for the JSON API (see docs/schemas/ in the repo root). */

export type FeatureKey =
  | "acousticness"
  | "danceability"
  | "energy"
  | "tempo"
  | "valence";

export type SortOrder = "asc" | "desc";

export interface FeatureMeta {
  key: FeatureKey;
  label: string;
  color: string;
}

export interface FeaturesResponse {
  features: FeatureMeta[];
}

export interface SongRow {
  id: string;
  title: string;
  artist: string;
  release_year: number;
  album_image_url: string | null;
  youtube_url: string | null;
  peak_position: number;
  weeks_on_chart: number;
  best_weekly_rank: number;
  cluster_id: number;
  features: Record<FeatureKey, number>;
  features_norm: Record<FeatureKey, number>;
}

export interface NumberOnesResponse {
  sort: FeatureKey;
  order: SortOrder;
  count: number;
  songs: SongRow[];
}

export interface ClusterSummary {
  id: number;
  name: string;
  color: string;
  size: number;
  centroid: number[];
}

export interface ClustersResponse {
  clusters: ClusterSummary[];
}

export interface ClusterDetail extends ClusterSummary {
  fun_fact: string;
  profile: number[];
  members: SongRow[];
}

export interface MegaHitRow {
  song_id: string;
  title: string;
  artist: string;
  release_year: number;
  peak_position: number;
  weeks_on_chart: number;
  cluster_id: number;
  cluster_name: string;
  cluster_color: string;
}

export interface MegahitsResponse {
  megahits: MegaHitRow[];
}

export interface SurveyOptionRow {
  song_id: string;
  title: string;
  artist: string;
  youtube_url: string | null;
  cluster_id: number;
}

export interface SurveyQuestionRow {
  prompt: string;
  options: SurveyOptionRow[];
}

export interface SurveyResponsePayload {
  questions: SurveyQuestionRow[];
}

export interface TasteResultResponse {
  mean_vector: number[];
  similarities: number[];
  assigned_cluster: number;
  cluster: ClusterDetail;
}

export interface SongsResponse {
  count: number;
  songs: SongRow[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
}
