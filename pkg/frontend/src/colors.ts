/** Deterministic color assignments. Node status coloring follows the
 * three-state convention: dark for lexicalised, light for unknown,
 * black for an attested gap. */

import type { Status } from "./types.js";

export const STATUS_COLORS: Record<Status, string> = {
  lexicalised: "#2b6cb0",
  unknown: "#cbd5e0",
  gap: "#000000",
};

export const GAP_COLOR = STATUS_COLORS.gap;

const PALETTE = [
  "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231",
  "#911eb4", "#46f0f0", "#f032e6", "#bcf60c", "#fabebe",
  "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000",
  "#aaffc3",
];

/** Stable palette lookup for categorical keys (phyla, cluster indices):
 * equal key sets always produce equal assignments. */
export function categoricalColors(keys: string[]): Map<string, string> {
  const assignment = new Map<string, string>();
  const unique = Array.from(new Set(keys)).sort();
  unique.forEach((key, index) => {
    assignment.set(key, PALETTE[index % PALETTE.length]);
  });
  return assignment;
}

export function clusterColor(index: number): string {
  return PALETTE[index % PALETTE.length];
}

/** Geographic coloring: hue from longitude, lightness from latitude, so
 * nearby speakers get similar colors without any server round trip. */
export function geographicColor(latitude: number | null, longitude: number | null): string {
  if (latitude === null || longitude === null) {
    return "#999999";
  }
  const hue = Math.round(((longitude + 180) / 360) * 360);
  const lightness = Math.round(35 + ((latitude + 90) / 180) * 30);
  return `hsl(${hue}, 70%, ${lightness}%)`;
}
