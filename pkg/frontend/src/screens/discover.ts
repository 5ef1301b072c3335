/** Discover screen: circular barplot of the No.1 songs, feature buttons, a
 * sort dropdown, the top-5 table, and a hover-linked center card plus radar.
 *
 * One payload drives everything a feature press changes: the number-ones
 * response is already sorted by the server, its rows carry every feature
 * value, and the top-5 table is its first five rows.
 */

import { api } from "../api";
import { renderCircularBarplot } from "../charts/circular";
import { renderRadar } from "../charts/radar";
import { clear, el, errorBanner, metric } from "../dom";
import type { Store } from "../state";
import type { FeatureKey, FeatureMeta, NumberOnesResponse, SongRow } from "../types";

export function renderDiscover(store: Store): HTMLElement {
  const root = el("section", { class: "screen discover" });
  let features: FeatureMeta[] = [];
  let page: NumberOnesResponse | null = null;
  // first rows of the payload fetched while sort == selected feature; the
  // sort dropdown alone must not change the top-5 table
  let topRows: SongRow[] = [];
  let renderedIds = new Set<string>();
  let lastKey = "";
  let refreshSeq = 0; // only the newest in-flight refresh may render

  const header = el("header", { class: "discover-header" },
    el("h1", {}, "Every No.1 song, by ear"),
    el("p", { class: "annotation" },
      "Which feature do you want to see? Pick one below; the bars, colors and ",
      "top-5 table change together. Hover a bar for the song's details."),
  );
  const controls = el("div", { class: "feature-buttons", role: "group" });
  const sortWrap = el("label", { class: "sort-control" }, "Sort bars by ");
  const sortSelect = el("select", { class: "sort-select" });
  sortWrap.append(sortSelect);
  const plotWrap = el("div", { class: "plot-wrap" });
  const centerCard = el("div", { class: "center-card", hidden: "" });
  const sidebar = el("aside", { class: "discover-side" });
  const topTable = el("div", { class: "top-five" });
  const radarWrap = el("div", { class: "radar-wrap" });
  const surveyNav = el("button", { class: "primary nav-survey", type: "button" },
    "Find your circle: take the survey");
  surveyNav.addEventListener("click", () => {
    store.dispatch({ type: "navigate", screen: "survey" });
  });
  sidebar.append(topTable, radarWrap);
  root.append(header, controls, sortWrap, plotWrap, centerCard, sidebar, surveyNav);

  sortSelect.addEventListener("change", () => {
    store.dispatch({ type: "setSortFeature", feature: sortSelect.value as FeatureKey });
    void refresh();
  });

  function featureMeta(key: FeatureKey): FeatureMeta {
    return features.find((meta) => meta.key === key)
      ?? { key, label: key, color: "#888888" };
  }

  function renderControls(): void {
    clear(controls);
    const selected = store.getState().selectedFeature;
    for (const meta of features) {
      const button = el("button", {
        type: "button",
        class: "feature-button" + (meta.key === selected ? " active" : ""),
        style: `--feature-color:${meta.color}`,
        "data-feature": meta.key,
      }, meta.label);
      button.addEventListener("click", () => {
        store.dispatch({ type: "selectFeature", feature: meta.key });
        void refresh();
      });
      controls.append(button);
    }
    clear(sortSelect);
    for (const meta of features) {
      const option = el("option", { value: meta.key }, meta.label);
      if (meta.key === store.getState().sortFeature) option.setAttribute("selected", "");
      sortSelect.append(option);
    }
  }

  function renderPlot(): void {
    if (!page) return;
    const state = store.getState();
    const meta = featureMeta(state.selectedFeature);
    clear(plotWrap);
    plotWrap.append(renderCircularBarplot({
      songs: page.songs,
      feature: state.selectedFeature,
      color: meta.color,
      hoveredSongId: state.hoveredSongId,
      onHover(songId) {
        store.dispatch({ type: "hoverSong", songId, rendered: renderedIds });
        renderHover();
      },
    }));
  }

  function renderTopFive(): void {
    const state = store.getState();
    const meta = featureMeta(state.selectedFeature);
    clear(topTable);
    topTable.append(el("h2", {}, `Top 5 by ${meta.label}`));
    const list = el("ol", { class: "top-five-list" });
    for (const song of topRows.slice(0, 5)) {
      list.append(el("li", { "data-song-id": song.id },
        song.album_image_url
          ? el("img", { src: song.album_image_url, alt: "", class: "album-thumb" })
          : el("span", { class: "album-thumb placeholder" }),
        el("span", { class: "top-title" }, `${song.title} - ${song.artist} `),
        metric(song.features[state.selectedFeature], "top-value"),
      ));
    }
    topTable.append(list);
  }

  function renderHover(): void {
    if (!page) return;
    const state = store.getState();
    const song: SongRow | undefined = page.songs.find((row) => row.id === state.hoveredSongId);
    clear(centerCard);
    clear(radarWrap);
    if (!song) {
      centerCard.setAttribute("hidden", "");
      radarWrap.append(el("p", { class: "radar-hint" }, "Hover a bar to see a song's shape."));
      return;
    }
    const meta = featureMeta(state.selectedFeature);
    centerCard.removeAttribute("hidden");
    centerCard.append(
      el("strong", {}, song.title),
      el("div", {}, song.artist),
      el("div", {}, metric(song.release_year)),
      el("div", {}, `${meta.label}: `, metric(song.features[state.selectedFeature])),
    );
    radarWrap.append(
      el("h2", {}, song.title),
      renderRadar(
        features.map((f) => ({ label: f.label, value: song.features_norm[f.key] })),
        meta.color,
      ),
    );
  }

  async function refresh(): Promise<void> {
    const seq = ++refreshSeq;
    const state = store.getState();
    const key = `${state.selectedFeature}|${state.sortFeature}`;
    try {
      if (features.length === 0) {
        features = (await api.features()).features;
      }
      if (key !== lastKey || page === null) {
        const loaded = await api.numberOnes(state.sortFeature, "desc");
        if (seq !== refreshSeq) return;
        page = loaded;
        lastKey = key;
        renderedIds = new Set(page.songs.map((song) => song.id));
        if (state.sortFeature === state.selectedFeature) {
          topRows = page.songs;
        }
      }
      if (seq !== refreshSeq) return;
      clear(root);
      root.append(header, controls, sortWrap, plotWrap, centerCard, sidebar, surveyNav);
      renderControls();
      renderPlot();
      renderTopFive();
      renderHover();
    } catch (failure) {
      if (seq !== refreshSeq) return;
      clear(root);
      root.append(header, errorBanner((failure as Error).message, () => void refresh()));
    }
  }

  void refresh();
  return root;
}
