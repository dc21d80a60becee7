import { describe, expect, it } from "vitest";

import { lineColor, mix, PALETTES, sensitivityBadge } from "../src/color";
import { computeLayout, DEFAULT_LAYOUT } from "../src/layout";
import type { DatasetSummary, DendrogramNode, DendrogramPayload } from "../src/types";

function syntheticTree(n: number): DendrogramPayload {
  // left-leaning chain: merge 0+1, then +2, then +3 ... heights grow linearly
  const nodes: DendrogramNode[] = [];
  for (let i = 0; i < n; i++) {
    nodes.push({ id: i, height: 0, members: [i], children: null, representative: i });
  }
  let previous = 0;
  for (let step = 0; step < n - 1; step++) {
    const id = n + step;
    const members = Array.from({ length: step + 2 }, (_, k) => k);
    nodes.push({
      id,
      height: (step + 1) / (n - 1),
      members,
      children: [previous, step + 1],
      representative: 0,
    });
    previous = id;
  }
  return {
    space: "X",
    linkage: "complete",
    normalization: "minmax",
    leafOrder: Array.from({ length: n }, (_, k) => k),
    nodes,
  };
}

describe("computeLayout", () => {
  it("keeps 48 leaves inside 1280 px without overlap", () => {
    const layout = computeLayout(syntheticTree(48), new Set(), DEFAULT_LAYOUT);
    expect(layout.leaves).toHaveLength(48);
    const xs = layout.leaves.map((l) => l.x).sort((a, b) => a - b);
    for (let k = 1; k < xs.length; k++) {
      expect(xs[k] - xs[k - 1]).toBeGreaterThanOrEqual(layout.slotWidth - 1e-9);
    }
    expect(Math.min(...xs)).toBeGreaterThanOrEqual(DEFAULT_LAYOUT.marginLeft);
    expect(Math.max(...xs)).toBeLessThanOrEqual(DEFAULT_LAYOUT.width);
  });

  it("folds a collapsed subtree into one slot with a proportional circle", () => {
    const tree = syntheticTree(8);
    const open = computeLayout(tree, new Set());
    const collapsedId = 11; // members {0..4}
    const layout = computeLayout(tree, new Set([collapsedId]));
    expect(layout.leaves).toHaveLength(8 - 5 + 1);
    expect(layout.circles).toHaveLength(1);
    const circle = layout.circles[0];
    expect(circle.nodeId).toBe(collapsedId);
    expect(circle.size).toBe(5);
    expect(open.circles).toHaveLength(0);
    // area grows with member count: r = 3 + k*sqrt(size/n)
    const bigger = computeLayout(tree, new Set([12]));
    expect(bigger.circles[0].radius).toBeGreaterThan(circle.radius);
  });

  it("keeps every subtree contiguous in x", () => {
    const tree = syntheticTree(16);
    const layout = computeLayout(tree, new Set());
    const position = new Map(layout.leaves.map((l, k) => [l.nodeId, k]));
    for (const node of tree.nodes) {
      if (!node.children) continue;
      const slots = node.members
        .map((m) => position.get(m))
        .filter((s): s is number => s !== undefined)
        .sort((a, b) => a - b);
      for (let k = 1; k < slots.length; k++) expect(slots[k] - slots[k - 1]).toBe(1);
    }
  });

  it("maps heights monotonically onto y", () => {
    const layout = computeLayout(syntheticTree(6), new Set());
    expect(layout.yOfHeight(0)).toBe(layout.baselineY);
    expect(layout.yOfHeight(layout.maxHeight)).toBeLessThan(layout.yOfHeight(0.5 * layout.maxHeight));
  });
});

describe("palettes", () => {
  it("uses red-blue for rank mode and purple-green for min-max", () => {
    expect(PALETTES.rank.positive).toBe("#b2182b");
    expect(PALETTES.rank.negative).toBe("#2166ac");
    expect(PALETTES.minmax.positive).toBe("#762a83");
    expect(PALETTES.minmax.negative).toBe("#1b7837");
  });

  it("renders zero as the gray center in both modes", () => {
    expect(lineColor(0, "rank")).toBe(PALETTES.rank.center);
    expect(lineColor(0, "minmax")).toBe(PALETTES.minmax.center);
  });

  it("reaches the palette endpoints at the extremes", () => {
    expect(lineColor(1, "rank")).toBe(mix("#999999", "#b2182b", 1));
    expect(lineColor(-1, "rank")).toBe(mix("#999999", "#2166ac", 1));
    expect(lineColor(1, "minmax")).toBe(mix("#999999", "#762a83", 1));
  });

  it("interpolates toward the endpoint with magnitude", () => {
    const weak = lineColor(0.2, "rank");
    const strong = lineColor(0.9, "rank");
    expect(weak).not.toBe(strong);
    expect(lineColor(0.2, "rank")).toBe(mix("#999999", "#b2182b", 0.2));
  });
});

describe("sensitivityBadge", () => {
  const dataset: DatasetSummary = {
    name: "d",
    cases: [],
    spaces: [
      { name: "K", kind: "parameter", payloadType: "ringKernel", hasPayloads: true },
      { name: "W", kind: "output", payloadType: "opaque", hasPayloads: false },
    ],
  };

  it("marks sensitive settings with the positive color when the parameter is primary", () => {
    const badge = sensitivityBadge(dataset, "K", "W", "rank");
    expect(badge.swatch).toBe(PALETTES.rank.positive);
    expect(badge.text).toContain("red");
    expect(badge.text).toContain("sensitive");
  });

  it("marks sensitive settings with the negative color when the output is primary", () => {
    const badge = sensitivityBadge(dataset, "W", "K", "minmax");
    expect(badge.swatch).toBe(PALETTES.minmax.negative);
    expect(badge.text).toContain("green");
  });

  it("gives no sensitivity direction for same-kind comparisons", () => {
    const badge = sensitivityBadge(dataset, "K", "K", "rank");
    expect(badge.swatch).toBeNull();
  });
});
