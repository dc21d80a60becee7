// Subset sensitivity: per-space diameter and index of the selected cluster,
// ranked by index magnitude, with signed bars in the active palette.

import { PALETTES } from "./color";
import type { NormalizationMode, SubsetTableResponse } from "./types";

export function renderSubsetTable(
  container: HTMLElement,
  table: SubsetTableResponse | null,
  mode: NormalizationMode,
): void {
  container.textContent = "";
  const heading = document.createElement("h3");
  heading.textContent = table
    ? `Subset sensitivity: cluster ${table.clusterNode} vs ${table.primarySpace}`
    : "Subset sensitivity: select a cluster";
  container.appendChild(heading);
  if (!table) return;

  const palette = PALETTES[mode];
  const grid = document.createElement("table");
  grid.className = "subset-table";
  grid.innerHTML = "<thead><tr><th>space</th><th>diameter</th><th>index</th><th></th></tr></thead>";
  const body = document.createElement("tbody");
  for (const row of table.rows) {
    const tr = document.createElement("tr");
    tr.dataset.space = row.spaceName;
    const bar = document.createElement("div");
    bar.className = "index-bar";
    const magnitude = Math.min(Math.abs(row.indexVsPrimary), 1);
    bar.style.width = `${(magnitude * 100).toFixed(1)}%`;
    bar.style.background = row.indexVsPrimary >= 0 ? palette.positive : palette.negative;
    if (row.indexVsPrimary === 0) bar.style.background = palette.center;
    tr.innerHTML =
      `<td>${row.spaceName}</td>` +
      `<td>${row.diameterInSpace.toFixed(3)}</td>` +
      `<td>${row.indexVsPrimary >= 0 ? "+" : ""}${row.indexVsPrimary.toFixed(3)}</td>`;
    const barCell = document.createElement("td");
    barCell.className = "bar-cell";
    barCell.appendChild(bar);
    tr.appendChild(barCell);
    body.appendChild(tr);
  }
  grid.appendChild(body);
  container.appendChild(grid);
}
