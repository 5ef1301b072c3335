/** Searchable, per-column-sortable song table. Filtering and ordering are
 * delegated to GET /api/songs; the component only re-renders payload rows. */

import { api } from "./api";
import { clear, el, errorBanner, metric } from "./dom";
import type { SortOrder } from "./types";

const COLUMNS: Array<{ key: string; label: string }> = [
  { key: "title", label: "Title" },
  { key: "artist", label: "Artist" },
  { key: "release_year", label: "Year" },
  { key: "peak_position", label: "Peak" },
  { key: "weeks_on_chart", label: "Weeks" },
];

export interface SongTable {
  root: HTMLElement;
  load(clusterId: number): Promise<void>;
}

export function createSongTable(): SongTable {
  let clusterId = 0;
  let search = "";
  let sort = "title";
  let order: SortOrder = "asc";
  let requestSeq = 0; // stale responses must not overwrite newer ones

  const root = el("div", { class: "song-table" });
  const input = el("input", {
    class: "table-search",
    type: "search",
    placeholder: "Search title or artist",
    "aria-label": "Search songs",
  });
  const body = el("div", { class: "table-body" });
  root.append(input, body);

  input.addEventListener("input", () => {
    search = input.value;
    void refresh();
  });

  async function refresh(): Promise<void> {
    const seq = ++requestSeq;
    try {
      const page = await api.songs({ search, sort, order, cluster: clusterId });
      if (seq !== requestSeq) return;
      clear(body);
      const head = el("tr", {});
      for (const column of COLUMNS) {
        const arrow = column.key === sort ? (order === "asc" ? " ↑" : " ↓") : "";
        const th = el("th", { "data-column": column.key, scope: "col" },
          el("button", { type: "button", class: "sort-header" }, column.label + arrow));
        th.querySelector("button")!.addEventListener("click", () => {
          if (sort === column.key) {
            order = order === "asc" ? "desc" : "asc";
          } else {
            sort = column.key;
            order = "asc";
          }
          void refresh();
        });
        head.append(th);
      }
      const table = el("table", {}, el("thead", {}, head));
      const rows = el("tbody", {});
      for (const song of page.songs) {
        rows.append(el("tr", { "data-song-id": song.id },
          el("td", {}, song.title),
          el("td", {}, song.artist),
          el("td", {}, metric(song.release_year)),
          el("td", {}, metric(song.peak_position)),
          el("td", {}, metric(song.weeks_on_chart)),
        ));
      }
      table.append(rows);
      body.append(table);
    } catch (failure) {
      if (seq !== requestSeq) return;
      clear(body);
      body.append(errorBanner(String((failure as Error).message), () => void refresh()));
    }
  }

  return {
    root,
    load(nextClusterId: number) {
      clusterId = nextClusterId;
      return refresh();
    },
  };
}
