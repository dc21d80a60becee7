// Dendrogram geometry: pure computation from (tree, leaf order, collapse set)
// to line segments, leaf slots and collapse circles in pixel space.

import { nodeById } from "./state";
import type { DendrogramPayload } from "./types";

export interface LayoutOptions {
  width: number;
  height: number;
  marginLeft: number; // axis gutter
  marginBottom: number; // leaf glyph strip
  marginTop: number;
}

export const DEFAULT_LAYOUT: LayoutOptions = {
  width: 1280,
  height: 420,
  marginLeft: 70,
  marginBottom: 96,
  marginTop: 12,
};

export interface VisibleLeaf {
  nodeId: number; // leaf node, or a collapsed internal node
  x: number;
  slot: number;
  collapsed: boolean;
  size: number; // member count (1 for plain leaves)
  representative: number; // case shown in the glyph strip
}

export interface DendrogramLine {
  nodeId: number;
  kind: "bar" | "stem";
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface CollapseCircle {
  nodeId: number;
  x: number;
  y: number;
  radius: number;
  size: number;
}

export interface DendrogramLayout {
  leaves: VisibleLeaf[];
  lines: DendrogramLine[];
  circles: CollapseCircle[];
  slotWidth: number;
  yOfHeight: (h: number) => number;
  maxHeight: number;
  baselineY: number;
}

export function computeLayout(
  tree: DendrogramPayload,
  collapsed: Set<number>,
  options: LayoutOptions = DEFAULT_LAYOUT,
): DendrogramLayout {
  const rootId = tree.nodes.length - 1;
  const maxHeight = Math.max(nodeById(tree, rootId).height, 1e-12);
  const innerHeight = options.height - options.marginTop - options.marginBottom;
  const baselineY = options.height - options.marginBottom;
  const yOfHeight = (h: number) => baselineY - (h / maxHeight) * innerHeight;

  // display order of visible leaves: walk children ordered by the position of
  // their first member in leafOrder, so folding preserves the leaf order
  const position = new Map<number, number>();
  tree.leafOrder.forEach((caseIdx, slot) => position.set(caseIdx, slot));
  const firstSlot = (id: number) =>
    Math.min(...nodeById(tree, id).members.map((m) => position.get(m)!));

  const leaves: VisibleLeaf[] = [];
  const collectVisible = (id: number) => {
    const node = nodeById(tree, id);
    if (node.children === null || collapsed.has(id)) {
      leaves.push({
        nodeId: id,
        x: 0,
        slot: 0,
        collapsed: node.children !== null,
        size: node.members.length,
        representative: node.representative,
      });
      return;
    }
    const [a, b] = node.children;
    const ordered = firstSlot(a) <= firstSlot(b) ? [a, b] : [b, a];
    collectVisible(ordered[0]);
    collectVisible(ordered[1]);
  };
  collectVisible(rootId);

  const slotWidth = (options.width - options.marginLeft) / leaves.length;
  leaves.forEach((leaf, slot) => {
    leaf.slot = slot;
    leaf.x = options.marginLeft + slotWidth * (slot + 0.5);
  });
  const xByNode = new Map<number, number>();
  for (const leaf of leaves) xByNode.set(leaf.nodeId, leaf.x);

  const lines: DendrogramLine[] = [];
  const circles: CollapseCircle[] = [];
  const maxRadius = Math.max(4, Math.min(slotWidth * 0.45, 18));
  const radiusOf = (size: number) =>
    3 + (maxRadius - 3) * Math.sqrt(size / tree.leafOrder.length);

  // node x positions bottom-up: visible leaves anchor, parents center
  const xOf = (id: number): number => {
    const known = xByNode.get(id);
    if (known !== undefined) return known;
    const node = nodeById(tree, id);
    const [a, b] = node.children!;
    const x = (xOf(a) + xOf(b)) / 2;
    xByNode.set(id, x);
    return x;
  };

  const emit = (id: number) => {
    const node = nodeById(tree, id);
    if (node.children === null) return;
    if (collapsed.has(id)) {
      circles.push({
        nodeId: id,
        x: xOf(id),
        y: yOfHeight(node.height),
        radius: radiusOf(node.members.length),
        size: node.members.length,
      });
      return;
    }
    const y = yOfHeight(node.height);
    const [a, b] = node.children;
    const xa = xOf(a);
    const xb = xOf(b);
    lines.push({ nodeId: id, kind: "bar", x1: Math.min(xa, xb), y1: y, x2: Math.max(xa, xb), y2: y });
    for (const child of [a, b]) {
      const childNode = nodeById(tree, child);
      // stems reach the baseline for leaves, or the child's merge height for
      // internal nodes; a collapsed child ends in its circle at that height
      const childTop = childNode.children === null ? baselineY : yOfHeight(childNode.height);
      lines.push({ nodeId: child, kind: "stem", x1: xOf(child), y1: y, x2: xOf(child), y2: childTop });
      emit(child);
    }
  };
  emit(rootId);

  return { leaves, lines, circles, slotWidth, yOfHeight, maxHeight, baselineY };
}
