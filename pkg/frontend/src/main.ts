// Application wiring: configuration panel, server round trips and the four
// linked views. The UI is a pure function of (server responses, UiState).

import { ApiClient } from "./api";
import { sensitivityBadge } from "./color";
import { renderDendrogram } from "./dendrogram";
import { renderGallery } from "./gallery";
import { renderShepardMatrix } from "./shepard";
import {
  collapseBelowHeight,
  initialState,
  isolate,
  pruneCollapsed,
  toggleCollapse,
  type UiState,
} from "./state";
import { renderSubsetTable } from "./subset";
import { hideTooltip, showTooltip } from "./tooltip";
import type {
  CasePayload,
  DatasetSummary,
  DendrogramResponse,
  MembersResponse,
  NormalizationMode,
  SubsetTableResponse,
} from "./types";

export class App {
  state!: UiState;
  dataset!: DatasetSummary;
  dendrogram: DendrogramResponse | null = null;
  members: MembersResponse | null = null;
  subset: SubsetTableResponse | null = null;
  private payloadCache = new Map<string, Map<number, CasePayload>>();

  constructor(
    readonly api: ApiClient,
    readonly root: HTMLElement,
  ) {}

  async start(): Promise<void> {
    this.dataset = await this.api.dataset();
    const spaces = this.dataset.spaces;
    const parameter = spaces.find((s) => s.kind === "parameter") ?? spaces[0];
    const output = spaces.find((s) => s.kind === "output") ?? spaces[spaces.length - 1];
    this.state = initialState({
      primarySpace: parameter.name,
      alternativeSpace: output.name,
      leafSpace: parameter.name,
      linkage: "complete",
      diamKind: null,
      normalization: "minmax",
      colorBounds: "theoretical",
      collapsedNodes: [],
    });
    this.buildSkeleton();
    await this.refresh();
    await this.refreshShepard();
  }

  private buildSkeleton(): void {
    this.root.innerHTML = `
      <header>
        <h2>Discrepancy workbench: <span id="dataset-name"></span></h2>
        <div id="role-badge" class="role-badge"></div>
      </header>
      <section id="config" class="config-panel"></section>
      <section id="dendrogram-view"></section>
      <div class="columns">
        <section id="gallery-view"></section>
        <section id="subset-view"></section>
        <section id="shepard-view"></section>
      </div>
      <div id="tooltip-host"></div>
    `;
    const name = this.root.querySelector("#dataset-name")!;
    name.textContent = this.dataset.name;
    this.buildConfigPanel();
  }

  private buildConfigPanel(): void {
    const panel = this.root.querySelector<HTMLElement>("#config")!;
    const spaceOptions = this.dataset.spaces
      .map((s) => `<option value="${s.name}">${s.name} (${s.kind})</option>`)
      .join("");
    panel.innerHTML = `
      <label>primary <select id="cfg-primary">${spaceOptions}</select></label>
      <label>alternative <select id="cfg-alternative">${spaceOptions}</select></label>
      <label>leaves <select id="cfg-leaf">${spaceOptions}</select></label>
      <label>linkage <select id="cfg-linkage">
        <option value="complete">complete</option><option value="average">average</option>
      </select></label>
      <label>normalization <select id="cfg-normalization">
        <option value="minmax">min-max</option><option value="rank">rank</option>
      </select></label>
      <label>color bounds <select id="cfg-bounds">
        <option value="theoretical">theoretical</option><option value="data">data</option>
      </select></label>
      <label>gallery sort <select id="cfg-sort">${spaceOptions}</select></label>
      <label>columns <input id="cfg-columns" type="number" min="1" value="4"></label>
    `;
    const bind = (id: string, apply: (value: string) => void) => {
      panel.querySelector<HTMLSelectElement | HTMLInputElement>(id)!.addEventListener("change", (e) => {
        apply((e.target as HTMLSelectElement).value);
        void this.refresh();
      });
    };
    (panel.querySelector("#cfg-primary") as HTMLSelectElement).value = this.state.config.primarySpace;
    (panel.querySelector("#cfg-alternative") as HTMLSelectElement).value = this.state.config.alternativeSpace;
    (panel.querySelector("#cfg-leaf") as HTMLSelectElement).value = this.state.config.leafSpace;
    (panel.querySelector("#cfg-sort") as HTMLSelectElement).value = this.state.gallerySortSpace;
    bind("#cfg-primary", (v) => (this.state.config.primarySpace = v));
    bind("#cfg-alternative", (v) => (this.state.config.alternativeSpace = v));
    bind("#cfg-leaf", (v) => (this.state.config.leafSpace = v));
    bind("#cfg-linkage", (v) => (this.state.config.linkage = v as "complete" | "average"));
    bind("#cfg-normalization", (v) => {
      this.state.config.normalization = v as NormalizationMode;
      void this.refreshShepard();
    });
    bind("#cfg-bounds", (v) => (this.state.config.colorBounds = v as "theoretical" | "data"));
    bind("#cfg-sort", (v) => (this.state.gallerySortSpace = v));
    bind("#cfg-columns", (v) => (this.state.galleryColumns = Math.max(1, Number(v) || 1)));
  }

  payloadTypeOf(space: string): string {
    return this.dataset.spaces.find((s) => s.name === space)?.payloadType ?? "scalar";
  }

  private async payloadsFor(space: string, cases: number[]): Promise<Map<number, CasePayload>> {
    if (!this.dataset.spaces.find((s) => s.name === space)?.hasPayloads) return new Map();
    let cache = this.payloadCache.get(space);
    if (!cache) {
      cache = new Map();
      this.payloadCache.set(space, cache);
    }
    const missing = cases.filter((c) => !cache!.has(c));
    await Promise.all(
      missing.map(async (c) => {
        cache!.set(c, await this.api.casePayload(this.dataset.cases[c].id, space));
      }),
    );
    return cache;
  }

  async refresh(): Promise<void> {
    this.state.config.collapsedNodes = [...this.state.collapsedNodes];
    const response = await this.api.dendrogram(this.state.config);
    this.dendrogram = response;
    pruneCollapsed(this.state, response.dendrogram);
    await this.renderAll();
  }

  async refreshShepard(): Promise<void> {
    const data = await this.api.shepard();
    renderShepardMatrix(this.root.querySelector<HTMLElement>("#shepard-view")!, data);
  }

  async renderAll(): Promise<void> {
    if (!this.dendrogram) return;
    const tree = this.dendrogram.dendrogram;
    const badge = this.root.querySelector<HTMLElement>("#role-badge")!;
    const info = sensitivityBadge(
      this.dataset,
      this.state.config.primarySpace,
      this.state.config.alternativeSpace,
      this.state.config.normalization,
    );
    badge.textContent = info.text;
    badge.style.borderColor = info.swatch ?? "#999";

    const representatives = new Set<number>();
    const collect = (id: number): void => {
      const node = tree.nodes[id];
      if (node.children === null || this.state.collapsedNodes.has(id)) {
        representatives.add(node.representative);
        return;
      }
      collect(node.children[0]);
      collect(node.children[1]);
    };
    collect(tree.nodes.length - 1);
    const leafPayloads = await this.payloadsFor(this.state.config.leafSpace, [...representatives]);

    renderDendrogram(
      this.root.querySelector<HTMLElement>("#dendrogram-view")!,
      this.dendrogram,
      this.state,
      leafPayloads,
      this.payloadTypeOf(this.state.config.leafSpace),
      {
        onToggleCollapse: (id) => {
          toggleCollapse(this.state, tree, id);
          void this.renderAll();
        },
        onIsolate: (id) => {
          isolate(this.state, tree, id);
          void this.renderAll();
        },
        onSelect: (id) => void this.selectCluster(id),
        onLeafClick: (id, anchor) => void this.openTooltip(id, anchor),
        onAxisClick: (h) => {
          collapseBelowHeight(this.state, tree, h);
          void this.renderAll();
        },
      },
    );
    renderGallery(
      this.root.querySelector<HTMLElement>("#gallery-view")!,
      this.members,
      this.members
        ? await this.payloadsFor(this.state.config.leafSpace, this.members.members.map((m) => m.case))
        : new Map(),
      this.payloadTypeOf(this.state.config.leafSpace),
      this.state,
    );
    renderSubsetTable(
      this.root.querySelector<HTMLElement>("#subset-view")!,
      this.subset,
      this.state.config.normalization,
    );
  }

  async selectCluster(nodeId: number): Promise<void> {
    this.state.selectedCluster = nodeId;
    [this.members, this.subset] = await Promise.all([
      this.api.members(nodeId, this.state.gallerySortSpace),
      this.api.subsetSensitivity(nodeId),
    ]);
    await this.renderAll();
  }

  async openTooltip(nodeId: number, anchor: Element): Promise<void> {
    if (!this.dendrogram) return;
    const node = this.dendrogram.dendrogram.nodes[nodeId];
    const caseIdx = node.representative;
    const space = this.state.config.leafSpace;
    const payloads = await this.payloadsFor(space, [caseIdx]);
    const payload = payloads.get(caseIdx);
    if (payload === undefined) return;
    showTooltip(
      this.root.querySelector<HTMLElement>("#tooltip-host")!,
      anchor,
      this.dataset.cases[caseIdx],
      this.payloadTypeOf(space),
      payload,
    );
  }
}

export async function boot(base = ""): Promise<App> {
  const root = document.querySelector<HTMLElement>("#app")!;
  const app = new App(new ApiClient(base), root);
  await app.start();
  return app;
}

if (typeof document !== "undefined" && document.querySelector("#app")?.hasAttribute("data-autoboot")) {
  void boot().catch((err) => {
    const root = document.querySelector<HTMLElement>("#app")!;
    root.innerHTML = `<div class="error-banner">failed to load: ${String(err)}</div>`;
  });
}

export { hideTooltip };
