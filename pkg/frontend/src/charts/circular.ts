/** Circular barplot: one bar per song, laid clockwise from 12 o'clock in the
 * order of the payload (the server already sorted it), bar length driven by
 * the selected feature's normalized value, song title at the bar end. */

import { svg } from "../dom";
import type { FeatureKey, SongRow } from "../types";

export interface CircularBarplotProps {
  songs: SongRow[];
  /** Feature whose value sets bar length and color. */
  feature: FeatureKey;
  color: string;
  hoveredSongId: string | null;
  onHover(songId: string | null): void;
}

const SIZE = 640;
const INNER = 110;
const MAX_BAR = 170;

export function renderCircularBarplot(props: CircularBarplotProps): SVGElement {
  const { songs, feature, color } = props;
  const center = SIZE / 2;
  const chart = svg("svg", {
    viewBox: `0 0 ${SIZE} ${SIZE}`,
    class: "circular-barplot",
    role: "img",
  });
  const count = songs.length || 1;

  songs.forEach((song, index) => {
    // clockwise, starting at the top
    const angle = (Math.PI * 2 * index) / count - Math.PI / 2;
    const cos = Math.cos(angle);
    const sin = Math.sin(angle);
    const length = Math.max(2, song.features_norm[feature] * MAX_BAR);
    const x1 = center + INNER * cos;
    const y1 = center + INNER * sin;
    const x2 = center + (INNER + length) * cos;
    const y2 = center + (INNER + length) * sin;

    const group = svg("g", {
      class: "bar" + (props.hoveredSongId === song.id ? " hovered" : ""),
      "data-song-id": song.id,
    });
    group.append(svg("line", {
      x1: String(x1), y1: String(y1), x2: String(x2), y2: String(y2),
      stroke: color,
      "stroke-width": String(Math.max(1.2, (Math.PI * 2 * INNER) / count - 1.5)),
      "stroke-linecap": "round",
    }));

    const degrees = (angle * 180) / Math.PI;
    const flip = cos < 0;
    const tx = center + (INNER + length + 6) * cos;
    const ty = center + (INNER + length + 6) * sin;
    group.append(svg("text", {
      class: "bar-title",
      x: String(tx), y: String(ty),
      transform: `rotate(${flip ? degrees + 180 : degrees} ${tx} ${ty})`,
      "text-anchor": flip ? "end" : "start",
      "dominant-baseline": "middle",
    }, song.title));

    group.addEventListener("mouseenter", () => props.onHover(song.id));
    group.addEventListener("mouseleave", () => props.onHover(null));
    chart.append(group);
  });

  // sort-order markers at the first and last bar position
  if (songs.length > 1) {
    chart.append(marker(center, "highest", 0, count));
    chart.append(marker(center, "lowest", count - 1, count));
  }
  return chart;
}

function marker(center: number, kind: "highest" | "lowest", index: number, count: number): SVGElement {
  const angle = (Math.PI * 2 * index) / count - Math.PI / 2;
  const r = INNER - 16;
  const x = center + r * Math.cos(angle);
  const y = center + r * Math.sin(angle);
  return svg("text", {
    class: `order-marker order-${kind}`,
    x: String(x), y: String(y),
    "text-anchor": "middle",
    "dominant-baseline": "middle",
  }, kind === "highest" ? "▲ highest" : "▽ lowest");
}
