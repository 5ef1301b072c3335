/** Cluster view: mega-hit bubble chart, cluster radar, and the song table,
 * all pinned to one active cluster id; clicking a legend swaps every idiom. */

import { api } from "../api";
import { renderBubbleChart } from "../charts/bubble";
import { renderRadar } from "../charts/radar";
import { clear, el, errorBanner, metric } from "../dom";
import { createSongTable } from "../table";
import type { Store } from "../state";
import type { ClusterDetail, ClustersResponse, FeatureMeta, MegahitsResponse } from "../types";

/** Positions of the five display features inside centroid/profile vectors
 * (the six-component order is acousticness, danceability, energy, key,
 * tempo, valence; key is not displayed). */
const PROFILE_AXES: Array<{ label: string; index: number }> = [
  { label: "Acousticness", index: 0 },
  { label: "Danceability", index: 1 },
  { label: "Energy", index: 2 },
  { label: "Tempo", index: 4 },
  { label: "Valence", index: 5 },
];

export function renderClusterView(store: Store): HTMLElement {
  const root = el("section", { class: "screen cluster-view" });
  let clusters: ClustersResponse | null = null;
  let megahits: MegahitsResponse | null = null;
  let detail: ClusterDetail | null = null;
  let showSeq = 0; // rapid legend clicks: only the newest detail may render
  const table = createSongTable();

  const annotation = el("div", { class: "cluster-annotation" });
  const bubbleWrap = el("div", { class: "bubble-area" });
  const radarWrap = el("div", { class: "cluster-radar" });
  const nav = el("div", { class: "cluster-nav" });
  const backButton = el("button", { type: "button", class: "secondary" }, "Back to discover");
  backButton.addEventListener("click", () => {
    store.dispatch({ type: "navigate", screen: "discover" });
  });
  const retake = el("button", { type: "button", class: "secondary" }, "Retake the survey");
  retake.addEventListener("click", () => {
    store.dispatch({ type: "resetSurvey" });
    store.dispatch({ type: "navigate", screen: "survey" });
  });
  nav.append(backButton, retake);

  function activeClusterId(): number {
    const state = store.getState();
    return state.activeCluster ?? state.assignedCluster ?? 0;
  }

  function renderAnnotation(): void {
    if (!detail) return;
    clear(annotation);
    const state = store.getState();
    const heading = state.assignedCluster === detail.id
      ? `Your circle: ${detail.name}`
      : detail.name;
    annotation.append(
      el("h1", {}, heading),
      el("p", { class: "fun-fact" }, detail.fun_fact),
      el("p", { class: "annotation" },
        el("span", { "data-metric": "1" }, String(detail.size)),
        " songs live here. Click a legend entry to explore the other circles; ",
        "the bubbles, the radar and the table all follow."),
    );
  }

  function renderBubble(): void {
    if (!clusters || !megahits) return;
    clear(bubbleWrap);
    bubbleWrap.append(
      el("h2", {}, "Mega-hits (top-10 peak, 50+ weeks)"),
      renderBubbleChart({
        hits: megahits.megahits,
        clusters: clusters.clusters,
        activeClusterId: activeClusterId(),
        onLegendClick(clusterId) {
          store.dispatch({ type: "activateCluster", clusterId });
          void showCluster();
        },
      }),
    );
  }

  function renderProfile(): void {
    if (!detail) return;
    clear(radarWrap);
    radarWrap.append(
      el("h2", {}, "Average sound of this circle"),
      renderRadar(
        PROFILE_AXES.map((axis) => ({ label: axis.label, value: detail!.profile[axis.index] })),
        detail.color,
      ),
    );
  }

  async function showCluster(): Promise<void> {
    const seq = ++showSeq;
    try {
      const loaded = await api.clusterDetail(activeClusterId());
      if (seq !== showSeq) return;
      detail = loaded;
      renderAnnotation();
      renderBubble();
      renderProfile();
      await table.load(detail.id);
    } catch (failure) {
      if (seq !== showSeq) return;
      clear(root);
      root.append(errorBanner((failure as Error).message, () => void load()));
    }
  }

  async function load(): Promise<void> {
    try {
      const [clustersBody, megahitsBody] = await Promise.all([api.clusters(), api.megahits()]);
      clusters = clustersBody;
      megahits = megahitsBody;
      clear(root);
      root.append(annotation, bubbleWrap, radarWrap,
        el("h2", { class: "table-heading" }, "Songs in this circle"), table.root, nav);
      await showCluster();
    } catch (failure) {
      clear(root);
      root.append(errorBanner((failure as Error).message, () => void load()));
    }
  }

  void load();
  return root;
}
