// Diverging palettes keyed to the normalization mode: red-blue for ranked
// distances, purple-green for min-max, gray at the zero center. Color values
// arrive from the server already normalized onto [-1, 1].

import type { DatasetSummary, NormalizationMode } from "./types";

export interface Palette {
  name: string;
  positive: string; // expanded in the alternative space
  negative: string; // shrunk in the alternative space
  center: string;
}

export const PALETTES: Record<NormalizationMode, Palette> = {
  rank: { name: "rankRedBlue", positive: "#b2182b", negative: "#2166ac", center: "#999999" },
  minmax: { name: "minmaxPurpleGreen", positive: "#762a83", negative: "#1b7837", center: "#999999" },
};

function channel(a: number, b: number, t: number): number {
  return Math.round(a + (b - a) * t);
}

function hexToRgb(hex: string): [number, number, number] {
  return [
    parseInt(hex.slice(1, 3), 16),
    parseInt(hex.slice(3, 5), 16),
    parseInt(hex.slice(5, 7), 16),
  ];
}

export function mix(from: string, to: string, t: number): string {
  const a = hexToRgb(from);
  const b = hexToRgb(to);
  const rgb = [channel(a[0], b[0], t), channel(a[1], b[1], t), channel(a[2], b[2], t)];
  return `rgb(${rgb[0]}, ${rgb[1]}, ${rgb[2]})`;
}

/** Line color for one node given its server-side color value in [-1, 1]. */
export function lineColor(colorValue: number, mode: NormalizationMode): string {
  const palette = PALETTES[mode];
  if (colorValue > 0) return mix(palette.center, palette.positive, Math.min(colorValue, 1));
  if (colorValue < 0) return mix(palette.center, palette.negative, Math.min(-colorValue, 1));
  return palette.center;
}

export interface RoleBadge {
  text: string;
  swatch: string | null; // color marking sensitive parameter settings, if defined
}

/**
 * Which color marks sensitive parameter settings under the current role
 * assignment: sensitive settings sit in clusters that are wider in the output
 * space, so the answer depends on whether the output is the primary or the
 * alternative distance.
 */
export function sensitivityBadge(
  dataset: DatasetSummary,
  primary: string,
  alternative: string,
  mode: NormalizationMode,
): RoleBadge {
  const kind = (name: string) => dataset.spaces.find((s) => s.name === name)?.kind;
  const palette = PALETTES[mode];
  const pk = kind(primary);
  const ak = kind(alternative);
  const positiveName = mode === "rank" ? "red" : "purple";
  const negativeName = mode === "rank" ? "blue" : "green";
  if (pk === "parameter" && ak === "output") {
    return {
      text: `${primary} → ${alternative}: ${positiveName} = wider in ${alternative} = sensitive parameter settings`,
      swatch: palette.positive,
    };
  }
  if (pk === "output" && ak === "parameter") {
    return {
      text: `${primary} → ${alternative}: ${negativeName} = narrower in ${alternative} = sensitive parameter settings`,
      swatch: palette.negative,
    };
  }
  return {
    text: `${primary} → ${alternative}: ${positiveName} = wider in ${alternative}`,
    swatch: null,
  };
}
