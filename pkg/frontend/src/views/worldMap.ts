/** World lexicalisation map: one dot per geolocated language.
 *
 * Without an active concept, dots are colored by phylum and sized by
 * lexicon size (radius strictly monotone in sense count). With an active
 * concept, dot color encodes the concept's cognate-cluster membership,
 * black marks an attested gap, and languages with no information are
 * omitted from the map entirely.
 */

import { categoricalColors, clusterColor, GAP_COLOR } from "../colors.js";
import type { Clusters, Language, Lexicalisations } from "../types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 720;
const HEIGHT = 360;

export interface WorldMapData {
  languages: Language[];
  /** present when a concept is active */
  lexicalisations?: Lexicalisations;
  clusters?: Clusters;
}

export interface WorldMapCallbacks {
  onLanguageClick?: (code: string) => void;
}

function project(latitude: number, longitude: number): [number, number] {
  const x = ((longitude + 180) / 360) * WIDTH;
  const y = ((90 - latitude) / 180) * HEIGHT;
  return [x, y];
}

function radiusFor(senses: number, maxSenses: number): number {
  if (maxSenses <= 0) return 4;
  return 4 + 10 * Math.sqrt(senses / maxSenses);
}

export function renderWorldMap(
  container: HTMLElement,
  data: WorldMapData,
  callbacks: WorldMapCallbacks = {},
): void {
  container.textContent = "";
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute("class", "world-map");
  svg.setAttribute("role", "img");

  const frame = document.createElementNS(SVG_NS, "rect");
  frame.setAttribute("width", String(WIDTH));
  frame.setAttribute("height", String(HEIGHT));
  frame.setAttribute("fill", "#eef6fb");
  svg.appendChild(frame);

  const geolocated = data.languages.filter(
    (lang) => lang.latitude !== null && lang.longitude !== null,
  );
  const phylumColors = categoricalColors(
    geolocated.map((lang) => lang.phylum ?? "unknown"),
  );
  const maxSenses = Math.max(0, ...geolocated.map((lang) => lang.senses ?? 0));
  const statuses = data.lexicalisations?.languages;
  const languageCluster = data.clusters?.language_cluster;

  for (const lang of geolocated) {
    let fill: string;
    if (statuses) {
      const entry = statuses[lang.code];
      if (!entry || entry.status === "unknown") {
        continue; // no information: not on the concept map
      }
      fill = entry.status === "gap"
        ? GAP_COLOR
        : clusterColor(languageCluster?.[lang.code] ?? 0);
    } else {
      fill = phylumColors.get(lang.phylum ?? "unknown") ?? "#999999";
    }
    const [x, y] = project(lang.latitude as number, lang.longitude as number);
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("class", "language-dot");
    dot.setAttribute("data-code", lang.code);
    dot.setAttribute("data-fill", fill);
    dot.setAttribute("cx", x.toFixed(2));
    dot.setAttribute("cy", y.toFixed(2));
    dot.setAttribute("r", radiusFor(lang.senses ?? 0, maxSenses).toFixed(2));
    dot.setAttribute("fill", fill);
    dot.setAttribute("stroke", "#ffffff");
    dot.addEventListener("click", () => callbacks.onLanguageClick?.(lang.code));

    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `${lang.name} (${lang.code})`;
    dot.appendChild(title);
    svg.appendChild(dot);
  }

  container.appendChild(svg);
}
