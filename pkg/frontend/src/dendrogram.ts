// The annotated dendrogram view: colored tree lines, collapse circles, leaf
// glyph strip, Y axis with cut interaction, color legend and the per-node
// vertical segment that encodes the index magnitude precisely.

import { lineColor, PALETTES } from "./color";
import { computeLayout, DEFAULT_LAYOUT, type LayoutOptions } from "./layout";
import { renderGlyph } from "./glyphs";
import type { UiState } from "./state";
import type { CasePayload, DendrogramResponse, NormalizationMode } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface DendrogramCallbacks {
  onToggleCollapse: (nodeId: number) => void;
  onIsolate: (nodeId: number) => void;
  onSelect: (nodeId: number) => void;
  onLeafClick: (nodeId: number, anchor: Element) => void;
  onAxisClick: (height: number) => void;
}

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, String(value));
  return node;
}

function dispatchNodeClick(event: MouseEvent, nodeId: number, callbacks: DendrogramCallbacks): void {
  if (event.shiftKey) callbacks.onToggleCollapse(nodeId);
  else if (event.metaKey || event.ctrlKey) callbacks.onIsolate(nodeId);
  else callbacks.onSelect(nodeId);
}

export function renderDendrogram(
  container: HTMLElement,
  response: DendrogramResponse,
  state: UiState,
  leafPayloads: Map<number, CasePayload>,
  leafPayloadType: string,
  callbacks: DendrogramCallbacks,
  options: LayoutOptions = DEFAULT_LAYOUT,
): void {
  const tree = response.dendrogram;
  const mode = tree.normalization as NormalizationMode;
  const layout = computeLayout(tree, state.collapsedNodes, options);
  container.textContent = "";

  const header = document.createElement("div");
  header.className = "dendro-header";
  header.textContent = `config ${response.configHash}`;
  container.appendChild(header);

  const svg = el("svg", {
    width: options.width,
    height: options.height,
    viewBox: `0 0 ${options.width} ${options.height}`,
  });
  svg.classList.add("dendrogram");
  container.appendChild(svg);

  // Y axis with clickable cut gutter
  const axisX = options.marginLeft - 26;
  const axis = el("line", {
    x1: axisX, y1: layout.yOfHeight(layout.maxHeight), x2: axisX, y2: layout.baselineY,
    stroke: "#444", "stroke-width": 1,
  });
  svg.appendChild(axis);
  const gutter = el("rect", {
    x: axisX - 12, y: layout.yOfHeight(layout.maxHeight), width: 24,
    height: layout.baselineY - layout.yOfHeight(layout.maxHeight),
    fill: "transparent",
  });
  gutter.classList.add("axis-gutter");
  gutter.addEventListener("click", (event) => {
    const rect = svg.getBoundingClientRect();
    const y = (event as MouseEvent).clientY - rect.top;
    const h = ((layout.baselineY - y) / (layout.baselineY - layout.yOfHeight(layout.maxHeight))) * layout.maxHeight;
    callbacks.onAxisClick(Math.max(0, Math.min(h, layout.maxHeight)));
  });
  svg.appendChild(gutter);
  for (const tick of [0, 0.25, 0.5, 0.75, 1]) {
    const h = tick * layout.maxHeight;
    const y = layout.yOfHeight(h);
    svg.appendChild(el("line", { x1: axisX - 4, y1: y, x2: axisX, y2: y, stroke: "#444" }));
    const label = el("text", {
      x: axisX - 7, y, "text-anchor": "end", "dominant-baseline": "central",
      "font-size": 10, fill: "#444",
    });
    label.textContent = h.toFixed(2);
    svg.appendChild(label);
  }

  // tree lines, hue-coded by the node's color value
  for (const line of layout.lines) {
    const color = lineColor(response.colorValues[String(line.nodeId)] ?? 0, mode);
    const shape = el("line", {
      x1: line.x1, y1: line.y1, x2: line.x2, y2: line.y2,
      stroke: color, "stroke-width": 2, "stroke-linecap": "round",
    });
    shape.classList.add("dendro-line");
    shape.dataset.nodeId = String(line.nodeId);
    shape.dataset.kind = line.kind;
    if (line.nodeId === state.selectedCluster) shape.classList.add("selected");
    const isLeaf = tree.nodes[line.nodeId]?.children === null;
    shape.addEventListener("click", (event) => {
      const mouse = event as MouseEvent;
      // plain click: leaves show their tooltip, internal nodes get selected
      if (isLeaf && !mouse.shiftKey && !mouse.metaKey && !mouse.ctrlKey) {
        callbacks.onLeafClick(line.nodeId, shape);
      } else {
        dispatchNodeClick(mouse, line.nodeId, callbacks);
      }
    });
    shape.addEventListener("mouseenter", () => showSegment(line.nodeId));
    svg.appendChild(shape);
  }

  // collapse circles, sized by member count (area grows linearly with it)
  for (const circle of layout.circles) {
    const color = lineColor(response.colorValues[String(circle.nodeId)] ?? 0, mode);
    const shape = el("circle", { cx: circle.x, cy: circle.y, r: circle.radius, fill: color });
    shape.classList.add("collapse-circle");
    shape.dataset.nodeId = String(circle.nodeId);
    shape.dataset.size = String(circle.size);
    shape.addEventListener("click", (event) =>
      dispatchNodeClick(event as MouseEvent, circle.nodeId, callbacks),
    );
    svg.appendChild(shape);
  }

  // vertical segment next to the axis: precise |index| readout on hover
  const segment = el("line", {
    x1: axisX + 10, y1: layout.baselineY, x2: axisX + 10, y2: layout.baselineY,
    stroke: "#222", "stroke-width": 4, visibility: "hidden",
  });
  segment.classList.add("index-segment");
  svg.appendChild(segment);
  const showSegment = (nodeId: number) => {
    const length = response.verticalSegmentLengths[String(nodeId)] ?? 0;
    const span = layout.baselineY - layout.yOfHeight(layout.maxHeight);
    segment.setAttribute("y2", String(layout.baselineY - length * span));
    segment.setAttribute("visibility", "visible");
    segment.dataset.nodeId = String(nodeId);
  };

  // leaf strip: glyphs for plain leaves, the representative for collapsed ones
  for (const leaf of layout.leaves) {
    const group = el("g", {
      transform: `translate(${leaf.x - Math.min(layout.slotWidth, 48) / 2}, ${layout.baselineY + 6})`,
    });
    group.classList.add(leaf.collapsed ? "leaf-representative" : "leaf-glyph");
    group.dataset.nodeId = String(leaf.nodeId);
    group.dataset.representative = String(leaf.representative);
    const payload = leafPayloads.get(leaf.representative);
    if (payload !== undefined) {
      group.appendChild(renderGlyph(leafPayloadType, payload, Math.min(layout.slotWidth, 48)));
    }
    group.addEventListener("click", () => callbacks.onLeafClick(leaf.nodeId, group));
    svg.appendChild(group);
  }

  // legend: active bounds under the diverging palette
  const palette = PALETTES[mode];
  const legend = document.createElement("div");
  legend.className = "legend";
  const [lo, hi] =
    state.config.colorBounds === "data" ? response.annotation.bounds.data : response.annotation.bounds.theoretical;
  legend.innerHTML =
    `<span class="swatch" style="background:${palette.negative}"></span>` +
    `<span class="legend-lo">${lo.toFixed(2)}</span>` +
    `<span class="swatch" style="background:${palette.center}"></span>0` +
    `<span class="legend-hi">${hi.toFixed(2)}</span>` +
    `<span class="swatch" style="background:${palette.positive}"></span>` +
    `<span class="legend-palette">${response.palette}</span>`;
  container.appendChild(legend);
}
