/** Similarity graph view: renders server-computed positions with pan and
 * zoom, edge opacity proportional to similarity, and a family|geography
 * coloring toggle that recolors dots without touching the layout. */

import { categoricalColors, geographicColor } from "../colors.js";
import type { Language, LayoutResult } from "../types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 600;
const MARGIN = 50;

export type Coloring = "family" | "geography";

export interface SimilarityGraphData {
  layout: LayoutResult;
  languages: Language[];
  coloring: Coloring;
}

export interface SimilarityGraphCallbacks {
  onColoringToggle?: (coloring: Coloring) => void;
  onLanguageClick?: (code: string) => void;
}

interface Viewport {
  x: number;
  y: number;
  scale: number;
}

function fitPositions(layout: LayoutResult): Map<string, [number, number]> {
  const codes = layout.nodes;
  const fitted = new Map<string, [number, number]>();
  if (codes.length === 0) return fitted;
  const xs = codes.map((c) => layout.positions[c][0]);
  const ys = codes.map((c) => layout.positions[c][1]);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const span = Math.max(maxX - minX, maxY - minY, 1e-9);
  const scale = (SIZE - 2 * MARGIN) / span;
  for (const code of codes) {
    const [x, y] = layout.positions[code];
    fitted.set(code, [
      MARGIN + (x - minX) * scale,
      MARGIN + (y - minY) * scale,
    ]);
  }
  return fitted;
}

export function renderSimilarityGraph(
  container: HTMLElement,
  data: SimilarityGraphData,
  callbacks: SimilarityGraphCallbacks = {},
): void {
  container.textContent = "";
  const view = document.createElement("div");
  view.className = "similarity-view";

  const toolbar = document.createElement("div");
  toolbar.className = "toolbar";
  const toggle = document.createElement("button");
  toggle.className = "coloring-toggle";
  toggle.textContent = `coloring: ${data.coloring}`;
  toggle.addEventListener("click", () => {
    callbacks.onColoringToggle?.(data.coloring === "family" ? "geography" : "family");
  });
  toolbar.appendChild(toggle);
  view.appendChild(toolbar);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", "similarity-graph");
  svg.setAttribute("data-seed", String(data.layout.seed));
  const viewport: Viewport = { x: 0, y: 0, scale: 1 };
  const applyViewport = () => {
    svg.setAttribute(
      "viewBox",
      `${viewport.x} ${viewport.y} ${SIZE / viewport.scale} ${SIZE / viewport.scale}`,
    );
  };
  applyViewport();

  const positions = fitPositions(data.layout);
  const byCode = new Map(data.languages.map((lang) => [lang.code, lang]));
  const phylumColors = categoricalColors(
    data.layout.nodes.map((code) => byCode.get(code)?.phylum ?? "unknown"),
  );

  for (const edge of data.layout.edges) {
    const from = positions.get(edge.a);
    const to = positions.get(edge.b);
    if (!from || !to) continue;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("class", "similarity-edge");
    line.setAttribute("x1", from[0].toFixed(2));
    line.setAttribute("y1", from[1].toFixed(2));
    line.setAttribute("x2", to[0].toFixed(2));
    line.setAttribute("y2", to[1].toFixed(2));
    line.setAttribute("stroke", "#445566");
    line.setAttribute("stroke-opacity", edge.weight.toFixed(3));
    line.setAttribute("data-weight", String(edge.weight));
    svg.appendChild(line);
  }

  for (const code of data.layout.nodes) {
    const position = positions.get(code);
    if (!position) continue;
    const lang = byCode.get(code);
    const fill = data.coloring === "family"
      ? phylumColors.get(lang?.phylum ?? "unknown") ?? "#999999"
      : geographicColor(lang?.latitude ?? null, lang?.longitude ?? null);
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("class", "similarity-node");
    dot.setAttribute("data-code", code);
    dot.setAttribute("data-x", String(data.layout.positions[code][0]));
    dot.setAttribute("data-y", String(data.layout.positions[code][1]));
    dot.setAttribute("cx", position[0].toFixed(2));
    dot.setAttribute("cy", position[1].toFixed(2));
    dot.setAttribute("r", "9");
    dot.setAttribute("fill", fill);
    dot.addEventListener("click", () => callbacks.onLanguageClick?.(code));
    svg.appendChild(dot);

    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", position[0].toFixed(2));
    label.setAttribute("y", (position[1] - 12).toFixed(2));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "node-label");
    label.textContent = code;
    svg.appendChild(label);
  }

  // pan with pointer drag, zoom with the wheel
  let dragging: { startX: number; startY: number; originX: number; originY: number } | null = null;
  svg.addEventListener("pointerdown", (event) => {
    dragging = {
      startX: event.clientX,
      startY: event.clientY,
      originX: viewport.x,
      originY: viewport.y,
    };
  });
  svg.addEventListener("pointermove", (event) => {
    if (!dragging) return;
    viewport.x = dragging.originX - (event.clientX - dragging.startX) / viewport.scale;
    viewport.y = dragging.originY - (event.clientY - dragging.startY) / viewport.scale;
    applyViewport();
  });
  svg.addEventListener("pointerup", () => {
    dragging = null;
  });
  svg.addEventListener("wheel", (event) => {
    event.preventDefault();
    const factor = event.deltaY < 0 ? 1.2 : 1 / 1.2;
    viewport.scale = Math.min(Math.max(viewport.scale * factor, 0.2), 8);
    applyViewport();
  });

  view.appendChild(svg);
  container.appendChild(view);
}
