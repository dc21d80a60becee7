// Typed client for the analysis service. Dendrogram requests follow a
// latest-config-wins policy: posting a new configuration aborts any request
// still in flight, so stale responses never reach the views.

import type {
  CasePayload,
  DatasetSummary,
  DendrogramResponse,
  MembersResponse,
  SessionConfig,
  ShepardResponse,
  SubsetTableResponse,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    detail: string,
  ) {
    super(`${code}: ${detail}`);
  }
}

async function parse<T>(response: Response): Promise<T> {
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, body.error ?? "Error", body.detail ?? "");
  }
  return body as T;
}

export class ApiClient {
  private pendingDendrogram: AbortController | null = null;

  constructor(readonly base: string = "") {}

  async dataset(): Promise<DatasetSummary> {
    return parse(await fetch(`${this.base}/api/dataset`));
  }

  async dendrogram(config: SessionConfig): Promise<DendrogramResponse> {
    this.pendingDendrogram?.abort();
    const controller = new AbortController();
    this.pendingDendrogram = controller;
    const response = await fetch(`${this.base}/api/dendrogram`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({
        primarySpace: config.primarySpace,
        alternativeSpace: config.alternativeSpace,
        leafSpace: config.leafSpace,
        linkage: config.linkage,
        diamKind: config.diamKind,
        normalization: config.normalization,
        colorBounds: config.colorBounds,
        collapsedNodes: config.collapsedNodes,
      }),
      signal: controller.signal,
    });
    if (this.pendingDendrogram === controller) this.pendingDendrogram = null;
    return parse(response);
  }

  async members(nodeId: number, sortSpace: string): Promise<MembersResponse> {
    const query = new URLSearchParams({ sortSpace });
    return parse(await fetch(`${this.base}/api/cluster/${nodeId}/members?${query}`));
  }

  async subsetSensitivity(nodeId: number): Promise<SubsetTableResponse> {
    return parse(await fetch(`${this.base}/api/cluster/${nodeId}/subset-sensitivity`));
  }

  async shepard(): Promise<ShepardResponse> {
    return parse(await fetch(`${this.base}/api/shepard`));
  }

  async casePayload(caseId: string, space: string): Promise<CasePayload> {
    return parse(
      await fetch(`${this.base}/api/case/${encodeURIComponent(caseId)}/space/${encodeURIComponent(space)}`),
    );
  }
}
