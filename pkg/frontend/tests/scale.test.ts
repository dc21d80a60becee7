// Scale smoke test: a 48-case, 3-space dataset (regionalization + kernel
// parameters, gridded output) renders all four views, and every server round
// trip completes well inside the interaction budget.

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { boot, type App } from "../src/main";
import {
  scratchDir,
  startService,
  waitFor,
  writeStudyShapedDataset,
  type RunningService,
} from "./server";

const ROUND_TRIP_BUDGET_MS = 200;

let service: RunningService;
let app: App;

async function timed(run: () => Promise<Response>): Promise<number> {
  const start = performance.now();
  const response = await run();
  expect(response.ok).toBe(true);
  await response.json();
  return performance.now() - start;
}

beforeAll(async () => {
  const manifest = writeStudyShapedDataset(scratchDir("discrep-scale-"));
  service = await startService(manifest);
  document.body.innerHTML = '<div id="app"></div>';
  app = await boot(service.base);
});

afterAll(async () => {
  await service?.stop();
});

describe("48-case study-shaped dataset", () => {
  it("loads with 48 cases and 3 spaces", () => {
    expect(app.dataset.cases).toHaveLength(48);
    expect(app.dataset.spaces.map((s) => s.name)).toEqual(["R", "K", "W"]);
  });

  it("renders all four views after selecting the root", async () => {
    const root = app.dendrogram!.dendrogram.nodes.length - 1;
    await app.selectCluster(root);
    await waitFor(() => document.querySelectorAll(".gallery-cell").length === 48);

    expect(document.querySelectorAll(".dendrogram .dendro-line").length).toBeGreaterThan(48);
    expect(document.querySelectorAll(".leaf-glyph")).toHaveLength(48);
    expect(document.querySelectorAll(".gallery-cell")).toHaveLength(48);
    expect(document.querySelectorAll(".subset-table tbody tr")).toHaveLength(3);
    expect(document.querySelectorAll(".shepard-panel")).toHaveLength(3);
    // leaf glyphs show the regionalization cells of the leaf space
    expect(
      document.querySelectorAll('.leaf-glyph svg[data-payload-type="regionalization"]').length,
    ).toBe(48);
  });

  it("answers every interaction round trip inside the budget", async () => {
    const base = service.base;
    const config = {
      primarySpace: "R",
      alternativeSpace: "W",
      leafSpace: "K",
      linkage: "average",
      normalization: "rank",
      colorBounds: "data",
      collapsedNodes: [],
    };
    const post = await timed(() =>
      fetch(`${base}/api/dendrogram`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(config),
      }),
    );
    const root = 48 * 2 - 2;
    const members = await timed(() => fetch(`${base}/api/cluster/${root}/members?sortSpace=W`));
    const subset = await timed(() => fetch(`${base}/api/cluster/${root}/subset-sensitivity`));
    const shepard = await timed(() => fetch(`${base}/api/shepard`));
    const payload = await timed(() => fetch(`${base}/api/case/s00/space/K`));

    for (const [name, ms] of Object.entries({ post, members, subset, shepard, payload })) {
      expect(ms, `${name} took ${ms.toFixed(1)} ms`).toBeLessThan(ROUND_TRIP_BUDGET_MS);
    }
  });

  it("keeps interactions responsive on the rendered tree", async () => {
    const bar = document.querySelector<SVGLineElement>('.dendro-line[data-kind="bar"]')!;
    const start = performance.now();
    bar.dispatchEvent(new MouseEvent("click", { bubbles: true, shiftKey: true }));
    await waitFor(() => document.querySelector(".collapse-circle") !== null);
    expect(performance.now() - start).toBeLessThan(1000);
  });
});
