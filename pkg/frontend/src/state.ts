// Display state and its transitions. Collapse state lives entirely on the
// client; the server always returns full trees.

import type { DendrogramPayload, DendrogramNode, SessionConfig } from "./types";

export interface UiState {
  config: SessionConfig;
  selectedCluster: number | null;
  collapsedNodes: Set<number>;
  galleryColumns: number;
  galleryColumnWidth: number;
  gallerySortSpace: string;
}

export function initialState(config: SessionConfig): UiState {
  return {
    config,
    selectedCluster: null,
    collapsedNodes: new Set(),
    galleryColumns: 4,
    galleryColumnWidth: 90,
    gallerySortSpace: config.primarySpace,
  };
}

export function nodeById(tree: DendrogramPayload, id: number): DendrogramNode {
  const node = tree.nodes[id];
  if (!node || node.id !== id) {
    const found = tree.nodes.find((n) => n.id === id);
    if (!found) throw new Error(`unknown node ${id}`);
    return found;
  }
  return node;
}

/** shift+click: toggle one internal node's collapsed state. */
export function toggleCollapse(state: UiState, tree: DendrogramPayload, id: number): void {
  if (nodeById(tree, id).children === null) return; // leaves cannot collapse
  if (state.collapsedNodes.has(id)) state.collapsedNodes.delete(id);
  else state.collapsedNodes.add(id);
}

function ancestorsOf(tree: DendrogramPayload, id: number): Set<number> {
  const parent = new Map<number, number>();
  for (const node of tree.nodes) {
    if (node.children) {
      parent.set(node.children[0], node.id);
      parent.set(node.children[1], node.id);
    }
  }
  const result = new Set<number>();
  let current = parent.get(id);
  while (current !== undefined) {
    result.add(current);
    current = parent.get(current);
  }
  return result;
}

function descendantsOf(tree: DendrogramPayload, id: number): Set<number> {
  const result = new Set<number>();
  const stack = [...(nodeById(tree, id).children ?? [])];
  while (stack.length) {
    const next = stack.pop()!;
    result.add(next);
    const children = nodeById(tree, next).children;
    if (children) stack.push(...children);
  }
  return result;
}

/**
 * meta+click: isolate a node by collapsing every internal node that is
 * neither the node itself nor one of its ancestors or descendants.
 */
export function isolate(state: UiState, tree: DendrogramPayload, id: number): void {
  const keepOpen = ancestorsOf(tree, id);
  const below = descendantsOf(tree, id);
  keepOpen.add(id);
  state.collapsedNodes.clear();
  for (const node of tree.nodes) {
    if (node.children === null) continue;
    if (!keepOpen.has(node.id) && !below.has(node.id)) state.collapsedNodes.add(node.id);
  }
}

/** Maximal nodes with height <= h; mirrors the engine's cut operation. */
export function cutAtHeight(tree: DendrogramPayload, h: number): number[] {
  const rootId = tree.nodes.length - 1;
  const result: number[] = [];
  const stack = [rootId];
  while (stack.length) {
    const node = nodeById(tree, stack.pop()!);
    if (node.height <= h) result.push(node.id);
    else if (node.children) {
      stack.push(node.children[1], node.children[0]);
    }
  }
  return result;
}

/** Y-axis click: collapse exactly the internal nodes of the cut at h. */
export function collapseBelowHeight(state: UiState, tree: DendrogramPayload, h: number): void {
  state.collapsedNodes.clear();
  for (const id of cutAtHeight(tree, h)) {
    if (nodeById(tree, id).children !== null) state.collapsedNodes.add(id);
  }
}

/** Drop collapsed ids that do not exist in the (new) tree. */
export function pruneCollapsed(state: UiState, tree: DendrogramPayload): void {
  const internal = new Set(tree.nodes.filter((n) => n.children !== null).map((n) => n.id));
  for (const id of [...state.collapsedNodes]) {
    if (!internal.has(id)) state.collapsedNodes.delete(id);
  }
}
