/** Concept explorer: three panes for one (concept, language) pair.
 *
 * Left: how the current language lexicalises the concept (synonyms,
 * gloss, part of speech, sense relations). Middle: the world map scoped
 * to the concept. Right: the navigable neighborhood graph, with dark
 * nodes for lexicalised concepts, light for unknown, black for gaps;
 * clicking a node refocuses the explorer, switching language re-annotates
 * without losing focus.
 */

import { STATUS_COLORS } from "../colors.js";
import type {
  Clusters,
  Concept,
  Language,
  Lexicalisations,
  Neighborhood,
  WordLookup,
} from "../types.js";
import { renderWorldMap, type WorldMapCallbacks } from "./worldMap.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const GRAPH_SIZE = 360;

export interface ConceptExplorerData {
  concept: Concept;
  language: string;
  languages: Language[];
  lexicalisations: Lexicalisations;
  clusters: Clusters;
  neighborhood: Neighborhood;
  /** lookups for the current language's lemmas, for the relations list */
  words: WordLookup[];
}

export interface ConceptExplorerCallbacks extends WorldMapCallbacks {
  onConceptClick?: (id: string) => void;
}

export function renderConceptExplorer(
  container: HTMLElement,
  data: ConceptExplorerData,
  callbacks: ConceptExplorerCallbacks = {},
): void {
  container.textContent = "";
  const screen = document.createElement("div");
  screen.className = "concept-explorer";

  screen.appendChild(renderDetailsPane(data));

  const mapPane = document.createElement("section");
  mapPane.className = "pane pane-map";
  const mapHeading = document.createElement("h3");
  mapHeading.textContent = `"${data.concept.id}" in the world`;
  mapPane.appendChild(mapHeading);
  const mapHost = document.createElement("div");
  mapPane.appendChild(mapHost);
  renderWorldMap(mapHost, {
    languages: data.languages,
    lexicalisations: data.lexicalisations,
    clusters: data.clusters,
  }, callbacks);
  screen.appendChild(mapPane);

  screen.appendChild(renderGraphPane(data, callbacks));
  container.appendChild(screen);
}

function renderDetailsPane(data: ConceptExplorerData): HTMLElement {
  const pane = document.createElement("section");
  pane.className = "pane pane-details";

  const entry = data.lexicalisations.languages[data.language];
  const heading = document.createElement("h3");
  heading.textContent = entry && entry.status === "lexicalised"
    ? entry.lemmas.join(", ")
    : data.concept.id;
  pane.appendChild(heading);

  const statusLine = document.createElement("p");
  statusLine.className = `status status-${entry?.status ?? "unknown"}`;
  statusLine.textContent = statusText(data.language, entry?.status ?? "unknown");
  pane.appendChild(statusLine);

  const gloss = document.createElement("p");
  gloss.className = "gloss";
  gloss.textContent = `${data.concept.gloss} (${data.concept.pos})`;
  pane.appendChild(gloss);

  const relations = document.createElement("ul");
  relations.className = "relations";
  for (const lookup of data.words) {
    for (const wordEntry of lookup.entries) {
      if (wordEntry.concept.id !== data.concept.id) continue;
      for (const cognate of wordEntry.cognates) {
        relations.appendChild(relationItem(
          "cognate",
          `${cognate.sense.language} "${cognate.sense.lemma}"`,
        ));
      }
      for (const rel of wordEntry.intra_relations) {
        relations.appendChild(relationItem(rel.kind, rel.target));
      }
    }
  }
  if (relations.childElementCount > 0) {
    pane.appendChild(relations);
  }
  return pane;
}

function relationItem(kind: string, text: string): HTMLElement {
  const item = document.createElement("li");
  item.className = `relation relation-${kind}`;
  item.textContent = `${kind}: ${text}`;
  return item;
}

function statusText(language: string, status: string): string {
  switch (status) {
    case "lexicalised":
      return `lexicalised in ${language}`;
    case "gap":
      return `lexical gap in ${language}: no word exists`;
    default:
      return `no information for ${language}`;
  }
}

/** Radial neighborhood rendering: the focus sits in the center, every
 * other node on a circle around it, edges underneath. Pure geometry from
 * the response's node order; no physics here. */
function renderGraphPane(
  data: ConceptExplorerData,
  callbacks: ConceptExplorerCallbacks,
): HTMLElement {
  const pane = document.createElement("section");
  pane.className = "pane pane-graph";
  const heading = document.createElement("h3");
  heading.textContent = "concept neighborhood";
  pane.appendChild(heading);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${GRAPH_SIZE} ${GRAPH_SIZE}`);
  svg.setAttribute("class", "neighborhood-graph");

  const center = GRAPH_SIZE / 2;
  const ring = GRAPH_SIZE / 2 - 60;
  const positions = new Map<string, [number, number]>();
  const others = data.neighborhood.nodes.filter((n) => n.id !== data.neighborhood.focus);
  positions.set(data.neighborhood.focus, [center, center]);
  others.forEach((node, index) => {
    const angle = (2 * Math.PI * index) / Math.max(others.length, 1) - Math.PI / 2;
    positions.set(node.id, [
      center + ring * Math.cos(angle),
      center + ring * Math.sin(angle),
    ]);
  });

  for (const edge of data.neighborhood.edges) {
    const from = positions.get(edge.source);
    const to = positions.get(edge.target);
    if (!from || !to) continue;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("class", `graph-edge edge-${edge.kind}`);
    line.setAttribute("x1", from[0].toFixed(1));
    line.setAttribute("y1", from[1].toFixed(1));
    line.setAttribute("x2", to[0].toFixed(1));
    line.setAttribute("y2", to[1].toFixed(1));
    line.setAttribute("stroke", "#8899aa");
    svg.appendChild(line);
  }

  for (const node of data.neighborhood.nodes) {
    const [x, y] = positions.get(node.id) as [number, number];
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", "graph-node");
    group.setAttribute("data-concept", node.id);
    group.setAttribute("data-status", node.status);
    group.addEventListener("click", () => callbacks.onConceptClick?.(node.id));

    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", x.toFixed(1));
    circle.setAttribute("cy", y.toFixed(1));
    circle.setAttribute("r", node.id === data.neighborhood.focus ? "26" : "18");
    circle.setAttribute("fill", STATUS_COLORS[node.status]);
    circle.setAttribute("stroke", "#334455");
    group.appendChild(circle);

    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", x.toFixed(1));
    label.setAttribute("y", (y + 34).toFixed(1));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "graph-label");
    label.textContent = node.lemmas.length > 0 ? node.lemmas[0] : node.id;
    group.appendChild(label);

    svg.appendChild(group);
  }

  pane.appendChild(svg);
  const legend = document.createElement("p");
  legend.className = "legend";
  legend.textContent = "dark: word exists · light: no data · black: lexical gap";
  pane.appendChild(legend);
  return pane;
}
