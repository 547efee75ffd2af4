import { describe, expect, it } from "vitest";

import { GAP_COLOR } from "../src/colors.js";
import { renderWorldMap } from "../src/views/worldMap.js";
import { CLUSTERS, LANGUAGES, LEXICALISATIONS } from "./fixture.js";

function mount(): HTMLElement {
  const host = document.createElement("div");
  document.body.appendChild(host);
  return host;
}

describe("world map", () => {
  it("shows one dot per geolocated language with one color per phylum", () => {
    const host = mount();
    renderWorldMap(host, { languages: LANGUAGES.items });
    const dots = host.querySelectorAll("circle.language-dot");
    expect(dots.length).toBe(6);
    const fills = new Set(
      Array.from(dots).map((dot) => dot.getAttribute("fill")),
    );
    expect(fills.size).toBe(4); // Indo-European, Uralic, Dravidian, Niger-Congo
  });

  it("renders deterministically for the fixture", () => {
    const host = mount();
    renderWorldMap(host, { languages: LANGUAGES.items });
    expect(host.innerHTML).toMatchSnapshot();
  });

  it("sizes dots monotonically in sense count", () => {
    const host = mount();
    renderWorldMap(host, { languages: LANGUAGES.items });
    const radius = (code: string) => Number(
      host.querySelector(`circle[data-code="${code}"]`)?.getAttribute("r"));
    expect(radius("eng")).toBeGreaterThan(radius("ita"));
    expect(radius("ita")).toBeGreaterThan(radius("fin"));
    expect(radius("fin")).toBe(radius("hun")); // equal lexicon sizes tie
  });

  it("colors fish dots by cognate cluster", () => {
    const host = mount();
    renderWorldMap(host, {
      languages: LANGUAGES.items,
      lexicalisations: LEXICALISATIONS.fish,
      clusters: CLUSTERS.fish,
    });
    const fill = (code: string) =>
      host.querySelector(`circle[data-code="${code}"]`)?.getAttribute("fill");
    expect(fill("eng")).toBe(fill("ita"));
    expect(fill("hun")).toBe(fill("fin"));
    expect(fill("eng")).not.toBe(fill("hun"));
    // kan and swa have no information about fish: omitted from the map
    expect(host.querySelector('circle[data-code="kan"]')).toBeNull();
    expect(host.querySelector('circle[data-code="swa"]')).toBeNull();
  });

  it("paints the Swahili dot black for the rice gap", () => {
    const host = mount();
    renderWorldMap(host, {
      languages: LANGUAGES.items,
      lexicalisations: LEXICALISATIONS["rice-general"],
      clusters: CLUSTERS["rice-general"],
    });
    const swa = host.querySelector('circle[data-code="swa"]');
    expect(swa?.getAttribute("fill")).toBe(GAP_COLOR);
  });

  it("reports clicked languages", () => {
    const host = mount();
    const clicked: string[] = [];
    renderWorldMap(host, { languages: LANGUAGES.items },
                   { onLanguageClick: (code) => clicked.push(code) });
    const dot = host.querySelector('circle[data-code="swa"]') as SVGCircleElement;
    dot.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    expect(clicked).toEqual(["swa"]);
  });
});
