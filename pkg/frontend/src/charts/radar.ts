/** Radar chart over at most 6 axes with values already scaled to [0, 1]. */

import { svg } from "../dom";
import { RADAR_FILL_OPACITY } from "../theme";

export interface RadarAxis {
  label: string;
  /** Unit-interval value straight from an API payload. */
  value: number;
}

export function renderRadar(axes: RadarAxis[], color: string, size = 240): SVGElement {
  const center = size / 2;
  const radius = size / 2 - 34;
  const count = axes.length;

  const point = (index: number, scale: number): [number, number] => {
    const angle = (Math.PI * 2 * index) / count - Math.PI / 2;
    return [center + radius * scale * Math.cos(angle), center + radius * scale * Math.sin(angle)];
  };

  const chart = svg("svg", {
    viewBox: `0 0 ${size} ${size}`,
    class: "radar",
    role: "img",
  });

  for (const ring of [0.25, 0.5, 0.75, 1.0]) {
    chart.append(svg("polygon", {
      class: "radar-ring",
      points: axes.map((_, i) => point(i, ring).join(",")).join(" "),
    }));
  }
  axes.forEach((axis, i) => {
    const [x, y] = point(i, 1);
    chart.append(svg("line", {
      class: "radar-spoke",
      x1: String(center), y1: String(center), x2: String(x), y2: String(y),
    }));
    const [lx, ly] = point(i, 1.17);
    chart.append(svg("text", {
      class: "radar-label",
      x: String(lx), y: String(ly),
      "text-anchor": "middle",
      "dominant-baseline": "middle",
    }, axis.label));
  });

  chart.append(svg("polygon", {
    class: "radar-shape",
    points: axes.map((axis, i) => point(i, axis.value).join(",")).join(" "),
    fill: color,
    "fill-opacity": String(RADAR_FILL_OPACITY),
    stroke: color,
  }));
  axes.forEach((axis, i) => {
    const [x, y] = point(i, axis.value);
    chart.append(svg("circle", {
      class: "radar-dot",
      cx: String(x), cy: String(y), r: "3.5", fill: color,
      "data-axis": axis.label,
    }));
  });

  return chart;
}
