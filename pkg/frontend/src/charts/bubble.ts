/** Mega-hit bubble chart: x = release year, y = peak position with rank 1 at
 * the top, bubble size = weeks on chart, color = cluster. Legends are
 * clickable and drive the whole cluster view. */

import { el, svg } from "../dom";
import { BUBBLE_DIM_OPACITY } from "../theme";
import type { ClusterSummary, MegaHitRow } from "../types";

export interface BubbleChartProps {
  hits: MegaHitRow[];
  clusters: ClusterSummary[];
  activeClusterId: number;
  onLegendClick(clusterId: number): void;
}

const WIDTH = 680;
const HEIGHT = 380;
const MARGIN = { top: 16, right: 20, bottom: 36, left: 44 };

export function renderBubbleChart(props: BubbleChartProps): HTMLElement {
  const { hits, clusters, activeClusterId } = props;
  const years = hits.map((hit) => hit.release_year);
  const minYear = Math.min(...years);
  const maxYear = Math.max(...years);
  const peaks = [...new Set(hits.map((hit) => hit.peak_position))].sort((a, b) => a - b);
  const maxWeeks = Math.max(...hits.map((hit) => hit.weeks_on_chart));

  const plotWidth = WIDTH - MARGIN.left - MARGIN.right;
  const plotHeight = HEIGHT - MARGIN.top - MARGIN.bottom;
  const x = (year: number) =>
    MARGIN.left + (maxYear === minYear ? 0.5 : (year - minYear) / (maxYear - minYear)) * plotWidth;
  // rank 1 belongs at the top
  const y = (peak: number) => MARGIN.top + ((peak - 1) / 10) * plotHeight;
  const r = (weeks: number) => 6 + 14 * Math.sqrt(weeks / maxWeeks);

  const chart = svg("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    class: "bubble-chart",
    role: "img",
  });

  chart.append(svg("line", {
    class: "axis", x1: String(MARGIN.left), y1: String(HEIGHT - MARGIN.bottom),
    x2: String(WIDTH - MARGIN.right), y2: String(HEIGHT - MARGIN.bottom),
  }));
  chart.append(svg("line", {
    class: "axis", x1: String(MARGIN.left), y1: String(MARGIN.top),
    x2: String(MARGIN.left), y2: String(HEIGHT - MARGIN.bottom),
  }));
  // tick labels reuse payload values only
  for (const year of [...new Set([minYear, maxYear])]) {
    chart.append(svg("text", {
      class: "tick", x: String(x(year)), y: String(HEIGHT - MARGIN.bottom + 18),
      "text-anchor": "middle", "data-metric": "1",
    }, String(year)));
  }
  for (const peak of peaks) {
    chart.append(svg("text", {
      class: "tick", x: String(MARGIN.left - 10), y: String(y(peak)),
      "text-anchor": "end", "dominant-baseline": "middle", "data-metric": "1",
    }, String(peak)));
  }
  chart.append(svg("text", {
    class: "axis-name", x: String(WIDTH / 2), y: String(HEIGHT - 4), "text-anchor": "middle",
  }, "release year"));
  chart.append(svg("text", {
    class: "axis-name", x: "12", y: String(HEIGHT / 2), "text-anchor": "middle",
    transform: `rotate(-90 12 ${HEIGHT / 2})`,
  }, "peak position"));

  const tooltip = el("div", { class: "bubble-tooltip", hidden: "" });

  for (const hit of hits) {
    const active = hit.cluster_id === activeClusterId;
    const bubble = svg("circle", {
      class: "bubble" + (active ? " active" : ""),
      cx: String(x(hit.release_year)),
      cy: String(y(hit.peak_position)),
      r: String(r(hit.weeks_on_chart)),
      fill: hit.cluster_color,
      "fill-opacity": active ? "0.9" : String(BUBBLE_DIM_OPACITY),
      stroke: active ? "#333333" : "none",
      "data-song-id": hit.song_id,
      "data-cluster-id": String(hit.cluster_id),
    });
    bubble.addEventListener("mouseenter", () => {
      tooltip.replaceChildren(
        el("strong", {}, `${hit.title} - ${hit.artist}`),
        el("div", { "data-metric": "1" }, String(hit.release_year)),
        el("div", {}, "peak ", el("span", { "data-metric": "1" }, String(hit.peak_position))),
        el("div", {}, el("span", { "data-metric": "1" }, String(hit.weeks_on_chart)), " weeks"),
        el("div", {}, hit.cluster_name),
      );
      tooltip.removeAttribute("hidden");
    });
    bubble.addEventListener("mouseleave", () => tooltip.setAttribute("hidden", ""));
    chart.append(bubble);
  }

  const legend = el("div", { class: "bubble-legend" });
  for (const cluster of clusters) {
    const entry = el("button", {
      class: "legend-entry" + (cluster.id === activeClusterId ? " active" : ""),
      type: "button",
      "data-cluster-id": String(cluster.id),
    },
      el("span", { class: "swatch", style: `background:${cluster.color}` }),
      cluster.name,
    );
    entry.addEventListener("click", () => props.onLegendClick(cluster.id));
    legend.append(entry);
  }

  return el("div", { class: "bubble-wrap" }, chart, legend, tooltip);
}
