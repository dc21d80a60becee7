// Gallery: data cases of the selected cluster in a grid, sorted by the 1D-MDS
// order of a chosen space, showing a chosen space's payload glyphs.

import { renderGlyph } from "./glyphs";
import type { UiState } from "./state";
import type { CasePayload, MembersResponse } from "./types";

export function renderGallery(
  container: HTMLElement,
  members: MembersResponse | null,
  payloads: Map<number, CasePayload>,
  payloadType: string,
  state: UiState,
): void {
  container.textContent = "";
  const heading = document.createElement("h3");
  heading.textContent = members
    ? `Gallery: cluster ${members.node} (${members.members.length} cases, sorted by ${members.sortSpace})`
    : "Gallery: select a cluster";
  container.appendChild(heading);
  if (!members) return;
  if (!members.converged) {
    const warn = document.createElement("div");
    warn.className = "warning";
    warn.textContent = "sort order fell back to case order (projection did not converge)";
    container.appendChild(warn);
  }

  const grid = document.createElement("div");
  grid.className = "gallery-grid";
  grid.style.gridTemplateColumns = `repeat(${state.galleryColumns}, ${state.galleryColumnWidth}px)`;
  for (const member of members.members) {
    const cell = document.createElement("figure");
    cell.className = "gallery-cell";
    cell.dataset.case = String(member.case);
    const payload = payloads.get(member.case);
    if (payload !== undefined) {
      cell.appendChild(renderGlyph(payloadType, payload, state.galleryColumnWidth - 10));
    }
    const caption = document.createElement("figcaption");
    caption.textContent = member.label;
    cell.appendChild(caption);
    grid.appendChild(cell);
  }
  container.appendChild(grid);
}
