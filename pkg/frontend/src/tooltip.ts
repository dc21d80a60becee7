// Leaf click tooltip: an enlarged payload rendering plus case metadata.

import { renderGlyph } from "./glyphs";
import type { CasePayload, CaseSummary } from "./types";

export function showTooltip(
  host: HTMLElement,
  anchor: Element,
  summary: CaseSummary,
  payloadType: string,
  payload: CasePayload,
): void {
  hideTooltip(host);
  const tip = document.createElement("div");
  tip.className = "tooltip";
  const title = document.createElement("strong");
  title.textContent = summary.label;
  tip.appendChild(title);
  tip.appendChild(renderGlyph(payloadType, payload, 160));
  const tags = Object.entries(summary.tags);
  if (tags.length) {
    const meta = document.createElement("div");
    meta.className = "tooltip-tags";
    meta.textContent = tags.map(([k, v]) => `${k}: ${v}`).join(", ");
    tip.appendChild(meta);
  }
  const rect = (anchor as SVGGraphicsElement).getBoundingClientRect?.();
  tip.style.left = `${(rect?.left ?? 0) + window.scrollX}px`;
  tip.style.top = `${(rect?.bottom ?? 0) + window.scrollY + 4}px`;
  tip.addEventListener("click", () => hideTooltip(host));
  host.appendChild(tip);
}

export function hideTooltip(host: HTMLElement): void {
  host.querySelectorAll(".tooltip").forEach((t) => t.remove());
}
