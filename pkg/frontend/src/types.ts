// Wire formats of the analysis service, mirrored one to one.

export type LinkageKind = "complete" | "average";
export type NormalizationMode = "rank" | "minmax";
export type ColorBoundsMode = "theoretical" | "data";

export interface SessionConfig {
  primarySpace: string;
  alternativeSpace: string;
  leafSpace: string;
  linkage: LinkageKind;
  diamKind: LinkageKind | null;
  normalization: NormalizationMode;
  colorBounds: ColorBoundsMode;
  collapsedNodes: number[];
}

export interface CaseSummary {
  id: string;
  label: string;
  tags: Record<string, string>;
}

export interface SpaceSummary {
  name: string;
  kind: "parameter" | "output";
  payloadType: string;
  hasPayloads: boolean;
}

export interface DatasetSummary {
  name: string;
  cases: CaseSummary[];
  spaces: SpaceSummary[];
}

export interface DendrogramNode {
  id: number;
  height: number;
  members: number[];
  children: [number, number] | null;
  representative: number;
}

export interface DendrogramPayload {
  space: string;
  linkage: string;
  normalization: string;
  leafOrder: number[];
  nodes: DendrogramNode[];
}

export interface AnnotationPayload {
  primary: string;
  alternative: string;
  diam: string;
  bounds: { theoretical: [number, number]; data: [number, number] };
  perNode: Record<string, number>;
}

export interface DendrogramResponse {
  dendrogram: DendrogramPayload;
  annotation: AnnotationPayload;
  colorValues: Record<string, number>;
  verticalSegmentLengths: Record<string, number>;
  palette: string;
  configHash: string;
}

export interface MemberEntry {
  case: number;
  id: string;
  label: string;
  coord: number;
}

export interface MembersResponse {
  node: number;
  sortSpace: string;
  converged: boolean;
  members: MemberEntry[];
}

export interface SubsetRow {
  spaceName: string;
  diameterInSpace: number;
  indexVsPrimary: number;
}

export interface SubsetTableResponse {
  clusterNode: number;
  primarySpace: string;
  rows: SubsetRow[];
}

export interface ShepardPoint {
  i: number;
  j: number;
  dx: number;
  dy: number;
  offDiag: number;
}

export interface ShepardPanel {
  spaceX: string;
  spaceY: string;
  normalization: string;
  points: ShepardPoint[];
}

export interface ShepardResponse {
  normalization: string;
  panels: ShepardPanel[];
}

// Payload value shapes, by space payloadType.
export type ScalarPayload = number;
export type VectorPayload = number[];
export type TimeSeriesPayload = [number, number][];
export interface Grid2dPayload {
  rows: number;
  cols: number;
  values: number[];
  mask?: boolean[];
}
export interface RingKernelPayload {
  inner: number;
  outer: number;
  units: string;
}
export type RegionalizationPayload = number[];
export type CasePayload =
  | ScalarPayload
  | VectorPayload
  | TimeSeriesPayload
  | Grid2dPayload
  | RingKernelPayload
  | RegionalizationPayload;
