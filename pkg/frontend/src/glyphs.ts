// Compact SVG glyphs for data-case payloads, one renderer per payload type:
// number chips for scalars, arrows for 2-vectors, line charts for time
// series, heatmaps for grids, concentric circles for ring kernels and
// abstract region cells for regionalizations.

import type { CasePayload, Grid2dPayload, RingKernelPayload } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";

export const REGION_COLORS = [
  "#8dd3c7", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
  "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5",
];

function svgElement(size: number): SVGSVGElement {
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("width", String(size));
  svg.setAttribute("height", String(size));
  svg.setAttribute("viewBox", `0 0 ${size} ${size}`);
  return svg;
}

function add<K extends keyof SVGElementTagNameMap>(
  parent: SVGElement,
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, String(value));
  parent.appendChild(el);
  return el;
}

function heatColor(t: number): string {
  // light yellow to dark red ramp
  const r = Math.round(255 - 75 * t);
  const g = Math.round(237 - 200 * t);
  const b = Math.round(160 - 120 * t);
  return `rgb(${r}, ${g}, ${b})`;
}

export function renderGlyph(payloadType: string, payload: CasePayload, size = 48): SVGSVGElement {
  const svg = svgElement(size);
  svg.dataset.payloadType = payloadType;
  switch (payloadType) {
    case "scalar": {
      add(svg, "rect", { x: 0.5, y: size * 0.3, width: size - 1, height: size * 0.4, rx: 4, fill: "#eef2f7", stroke: "#b8c4d0" });
      const text = add(svg, "text", {
        x: size / 2, y: size * 0.5, "dominant-baseline": "central", "text-anchor": "middle",
        "font-size": size * 0.28, "font-family": "monospace", fill: "#233",
      });
      text.textContent = formatNumber(payload as number);
      break;
    }
    case "vector": {
      const values = payload as number[];
      if (values.length === 2) {
        drawArrow(svg, size, values[0], values[1]);
      } else {
        drawBars(svg, size, values);
      }
      break;
    }
    case "timeSeries": {
      const points = payload as [number, number][];
      drawLineChart(svg, size, points);
      break;
    }
    case "grid2d": {
      drawGrid(svg, size, payload as Grid2dPayload);
      break;
    }
    case "ringKernel": {
      drawRings(svg, size, payload as RingKernelPayload);
      break;
    }
    case "regionalization": {
      drawRegions(svg, size, payload as number[]);
      break;
    }
    default: {
      const text = add(svg, "text", {
        x: size / 2, y: size / 2, "text-anchor": "middle", "dominant-baseline": "central",
        "font-size": size * 0.24, fill: "#667",
      });
      text.textContent = "(opaque)";
    }
  }
  return svg;
}

function formatNumber(v: number): string {
  if (Number.isInteger(v)) return String(v);
  const magnitude = Math.abs(v);
  if (magnitude >= 100 || (magnitude < 0.01 && magnitude > 0)) return v.toExponential(1);
  return v.toFixed(2);
}

function drawArrow(svg: SVGSVGElement, size: number, dx: number, dy: number): void {
  const cx = size / 2;
  const cy = size / 2;
  const norm = Math.hypot(dx, dy) || 1;
  const scale = (size * 0.38) / norm;
  const x2 = cx + dx * scale;
  const y2 = cy - dy * scale;
  add(svg, "circle", { cx, cy, r: 2, fill: "#456" });
  add(svg, "line", { x1: cx, y1: cy, x2, y2, stroke: "#456", "stroke-width": 2 });
  const angle = Math.atan2(cy - y2, x2 - cx);
  for (const side of [-1, 1]) {
    const wing = angle + Math.PI + (side * Math.PI) / 7;
    add(svg, "line", {
      x1: x2, y1: y2,
      x2: x2 + Math.cos(wing) * size * 0.12,
      y2: y2 - Math.sin(wing) * size * 0.12,
      stroke: "#456", "stroke-width": 2,
    });
  }
}

function drawBars(svg: SVGSVGElement, size: number, values: number[]): void {
  const max = Math.max(...values.map(Math.abs), 1e-12);
  const barWidth = size / values.length;
  values.forEach((v, k) => {
    const h = (Math.abs(v) / max) * size * 0.8;
    add(svg, "rect", {
      x: k * barWidth + 1, y: size - h, width: Math.max(barWidth - 2, 1), height: h,
      fill: v >= 0 ? "#5b8db8" : "#c66",
    });
  });
}

function drawLineChart(svg: SVGSVGElement, size: number, points: [number, number][]): void {
  const ts = points.map((p) => p[0]);
  const vs = points.map((p) => p[1]);
  const t0 = Math.min(...ts);
  const t1 = Math.max(...ts) || 1;
  const v0 = Math.min(...vs);
  const v1 = Math.max(...vs);
  const span = v1 - v0 || 1;
  const path = points
    .map((p, k) => {
      const x = ((p[0] - t0) / (t1 - t0 || 1)) * (size - 4) + 2;
      const y = size - 4 - ((p[1] - v0) / span) * (size - 8);
      return `${k ? "L" : "M"}${x.toFixed(1)},${y.toFixed(1)}`;
    })
    .join(" ");
  add(svg, "path", { d: path, fill: "none", stroke: "#2a7", "stroke-width": 1.5 });
}

function drawGrid(svg: SVGSVGElement, size: number, grid: Grid2dPayload): void {
  const finite = grid.values.filter((_, k) => !grid.mask?.[k]);
  const lo = Math.min(...finite);
  const hi = Math.max(...finite);
  const span = hi - lo || 1;
  const cw = size / grid.cols;
  const ch = size / grid.rows;
  grid.values.forEach((v, k) => {
    const row = Math.floor(k / grid.cols);
    const col = k % grid.cols;
    const masked = grid.mask?.[k] ?? false;
    add(svg, "rect", {
      x: col * cw, y: row * ch, width: cw, height: ch,
      fill: masked ? "#fff" : heatColor((v - lo) / span),
    });
  });
}

function drawRings(svg: SVGSVGElement, size: number, ring: RingKernelPayload): void {
  const scale = (size * 0.45) / Math.max(ring.outer, 1e-12);
  const cx = size / 2;
  add(svg, "circle", { cx, cy: cx, r: ring.outer * scale, fill: "#cfe0ee", stroke: "#5b8db8" });
  if (ring.inner > 0) {
    add(svg, "circle", { cx, cy: cx, r: ring.inner * scale, fill: "#fff", stroke: "#5b8db8" });
  }
}

function drawRegions(svg: SVGSVGElement, size: number, labels: number[]): void {
  // abstract normalized layout: locations on a near-square grid, cells
  // colored by region id (no geography is available or implied)
  const cols = Math.ceil(Math.sqrt(labels.length));
  const rows = Math.ceil(labels.length / cols);
  const cw = size / cols;
  const ch = size / rows;
  const ids = [...new Set(labels)].sort((a, b) => a - b);
  labels.forEach((label, k) => {
    add(svg, "rect", {
      x: (k % cols) * cw, y: Math.floor(k / cols) * ch,
      width: cw, height: ch,
      fill: REGION_COLORS[ids.indexOf(label) % REGION_COLORS.length],
      stroke: "#fff", "stroke-width": 0.5,
    });
  });
}
