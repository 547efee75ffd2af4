import { describe, expect, it } from "vitest";

import { renderGapExplorer } from "../src/views/gapExplorer.js";
import { LANGUAGES, TREES } from "./fixture.js";

function mount(): HTMLElement {
  const host = document.createElement("div");
  document.body.appendChild(host);
  return host;
}

describe("gap explorer", () => {
  it("shows 66 black gap nodes and one lexicalised node for English cousins", () => {
    const host = mount();
    renderGapExplorer(host, { tree: TREES["cousin|eng"], languages: LANGUAGES.items });
    expect(host.querySelectorAll('.tree-node[data-status="gap"]').length).toBe(66);
    expect(host.querySelectorAll('.tree-node[data-status="lexicalised"]').length).toBe(1);
    expect(host.querySelector(".gap-summary")?.textContent)
      .toContain("67 concepts: 1 lexicalised, 66 gaps, 0 unknown");
  });

  it("shows 16 lexicalised nodes for dra", () => {
    const host = mount();
    renderGapExplorer(host, { tree: TREES["cousin|dra"], languages: LANGUAGES.items });
    expect(host.querySelectorAll('.tree-node[data-status="lexicalised"]').length).toBe(16);
    expect(host.querySelectorAll('.tree-node[data-status="unknown"]').length).toBe(51);
  });

  it("renders deterministically", () => {
    const host = mount();
    renderGapExplorer(host, { tree: TREES["cousin|eng"], languages: LANGUAGES.items });
    expect(host.innerHTML).toMatchSnapshot();
  });

  it("switches languages through the selector", () => {
    const host = mount();
    const changes: string[] = [];
    renderGapExplorer(host, { tree: TREES["cousin|eng"], languages: LANGUAGES.items },
                      { onLanguageChange: (code) => changes.push(code) });
    const select = host.querySelector("select.language-switcher") as HTMLSelectElement;
    select.value = "ita";
    select.dispatchEvent(new Event("change", { bubbles: true }));
    expect(changes).toEqual(["ita"]);
  });
});
