/** Thin typed client for the server's endpoints. The UI computes nothing from
 * feature values itself; every rendered number comes out of these payloads. */

import type {
  ClusterDetail,
  ClustersResponse,
  FeatureKey,
  FeaturesResponse,
  MegahitsResponse,
  NumberOnesResponse,
  SongsResponse,
  SortOrder,
  SurveyResponsePayload,
  TasteResultResponse,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

let baseUrl = "";

/** Point the client somewhere else (tests, dev server on another port). */
export function setApiBase(url: string): void {
  baseUrl = url.replace(/\/$/, "");
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(baseUrl + path, init);
  } catch (cause) {
    throw new ApiError(0, "network_error", `cannot reach the server (${String(cause)})`);
  }
  if (!response.ok) {
    let code = "http_error";
    let message = `request failed with status ${response.status}`;
    try {
      const body = (await response.json()) as { code?: string; message?: string };
      if (body.code) code = body.code;
      if (body.message) message = body.message;
    } catch {
      /* non-JSON error body; keep the defaults */
    }
    throw new ApiError(response.status, code, message);
  }
  return (await response.json()) as T;
}

export interface SongsQuery {
  search?: string;
  sort?: string;
  order?: SortOrder;
  cluster?: number;
}

export const api = {
  features(): Promise<FeaturesResponse> {
    return request("/api/features");
  },

  numberOnes(sort: FeatureKey, order: SortOrder = "desc"): Promise<NumberOnesResponse> {
    return request(`/api/number-ones?sort=${sort}&order=${order}`);
  },

  clusters(): Promise<ClustersResponse> {
    return request("/api/clusters");
  },

  clusterDetail(id: number): Promise<ClusterDetail> {
    return request(`/api/clusters/${id}`);
  },

  megahits(): Promise<MegahitsResponse> {
    return request("/api/megahits");
  },

  survey(): Promise<SurveyResponsePayload> {
    return request("/api/survey");
  },

  submitSurvey(chosenSongIds: string[]): Promise<TasteResultResponse> {
    return request("/api/survey", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ chosen_song_ids: chosenSongIds }),
    });
  },

  songs(query: SongsQuery = {}): Promise<SongsResponse> {
    const params = new URLSearchParams();
    if (query.search !== undefined) params.set("search", query.search);
    if (query.sort !== undefined) params.set("sort", query.sort);
    if (query.order !== undefined) params.set("order", query.order);
    if (query.cluster !== undefined) params.set("cluster", String(query.cluster));
    const suffix = params.toString();
    return request(`/api/songs${suffix ? `?${suffix}` : ""}`);
  },
};
