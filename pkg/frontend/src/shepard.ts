// Shepard matrix: one scatter panel per space pair, axes are the two spaces'
// normalized distances, the identity diagonal marks perfect correspondence
// and point hue encodes the off-diagonal residual with the shared palette.

import { lineColor } from "./color";
import type { NormalizationMode, ShepardResponse } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";
const PANEL = 170;
const PAD = 26;

export function renderShepardMatrix(container: HTMLElement, data: ShepardResponse | null): void {
  container.textContent = "";
  const heading = document.createElement("h3");
  heading.textContent = data
    ? `Shepard matrix (${data.normalization})`
    : "Shepard matrix";
  container.appendChild(heading);
  if (!data) return;

  const wrap = document.createElement("div");
  wrap.className = "shepard-wrap";
  const mode = data.normalization as NormalizationMode;
  for (const panel of data.panels) {
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("width", String(PANEL));
    svg.setAttribute("height", String(PANEL));
    svg.setAttribute("viewBox", `0 0 ${PANEL} ${PANEL}`);
    svg.classList.add("shepard-panel");
    svg.dataset.spaceX = panel.spaceX;
    svg.dataset.spaceY = panel.spaceY;

    const frame = document.createElementNS(SVG_NS, "rect");
    setAttrs(frame, { x: PAD, y: 6, width: PANEL - PAD - 6, height: PANEL - PAD - 6, fill: "#fff", stroke: "#ccc" });
    svg.appendChild(frame);

    const diagonal = document.createElementNS(SVG_NS, "line");
    setAttrs(diagonal, { x1: PAD, y1: 6, x2: PANEL - 6, y2: PANEL - PAD, stroke: "#bbb", "stroke-dasharray": "3 2" });
    diagonal.classList.add("identity-diagonal");
    svg.appendChild(diagonal);

    const plotW = PANEL - PAD - 6;
    const plotH = PANEL - PAD - 6;
    for (const point of panel.points) {
      const dot = document.createElementNS(SVG_NS, "circle");
      setAttrs(dot, {
        cx: PAD + point.dx * plotW,
        cy: 6 + (1 - point.dy) * plotH,
        r: 1.8,
        fill: lineColor(point.offDiag, mode),
        "fill-opacity": 0.75,
      });
      svg.appendChild(dot);
    }

    const xLabel = document.createElementNS(SVG_NS, "text");
    setAttrs(xLabel, { x: PAD + plotW / 2, y: PANEL - 8, "text-anchor": "middle", "font-size": 11, fill: "#345" });
    xLabel.textContent = panel.spaceX;
    svg.appendChild(xLabel);
    const yLabel = document.createElementNS(SVG_NS, "text");
    setAttrs(yLabel, {
      x: 10, y: 6 + plotH / 2, "text-anchor": "middle", "font-size": 11, fill: "#345",
      transform: `rotate(-90 10 ${6 + plotH / 2})`,
    });
    yLabel.textContent = panel.spaceY;
    svg.appendChild(yLabel);

    wrap.appendChild(svg);
  }
  container.appendChild(wrap);
}

function setAttrs(node: SVGElement, attrs: Record<string, string | number>): void {
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, String(value));
}

// Hue distance from the diagonal reuses the dendrogram's color scale; the
// offDiag of a pair equals its two-element-cluster index by construction.
export { lineColor as shepardPointColor };
