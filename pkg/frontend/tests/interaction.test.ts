/** Scripted browser-style test of the exploration loop: the DOM is driven
 * through real events and every update flows state -> fetch -> render. */

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { ExplorerApp } from "../src/app.js";
import { STATUS_COLORS } from "../src/colors.js";
import { mockBackend } from "./mockFetch.js";

function mount(): HTMLElement {
  const host = document.createElement("div");
  document.body.appendChild(host);
  return host;
}

describe("exploration interaction loop", () => {
  beforeEach(() => {
    document.body.textContent = "";
  });

  it("clicking the Swahili dot turns the rice-general focus black", async () => {
    const backend = mockBackend();
    const app = new ExplorerApp(
      mount().appendChild(document.createElement("div")),
      new ApiClient("/v1", backend.fetch),
      { view: "concept", concept: "rice-general", language: "eng" },
    );
    await app.update({});
    const host = document.body;

    const focusBefore = host.querySelector('g[data-concept="rice-general"] circle');
    expect(focusBefore?.getAttribute("fill")).toBe(STATUS_COLORS.lexicalised);

    const swaDot = host.querySelector('circle.language-dot[data-code="swa"]') as SVGCircleElement;
    expect(swaDot).not.toBeNull();
    swaDot.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await app.settle();

    expect(app.state.language).toBe("swa");
    const focusAfter = host.querySelector('g[data-concept="rice-general"] circle');
    expect(focusAfter?.getAttribute("fill")).toBe(STATUS_COLORS.gap);
    // the focus concept is kept across the language change
    expect(app.state.concept).toBe("rice-general");
  });

  it("clicking a neighborhood node refocuses the explorer", async () => {
    const backend = mockBackend();
    const app = new ExplorerApp(
      mount(),
      new ApiClient("/v1", backend.fetch),
      { view: "concept", concept: "rice-general", language: "eng" },
    );
    await app.update({});
    const node = document.body.querySelector('g[data-concept="raw-rice"]') as SVGGElement;
    node.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await app.settle();
    expect(app.state.concept).toBe("raw-rice");
  });

  it("shows a visible error state when the backend is unreachable", async () => {
    const app = new ExplorerApp(
      mount(),
      new ApiClient("/v1", () => Promise.reject(new TypeError("connection refused"))),
      { view: "map" },
    );
    await app.update({});
    const banner = document.body.querySelector(".error-banner");
    expect(banner).not.toBeNull();
    expect(banner?.textContent).toContain("backend unreachable");
  });

  it("navigating to the gap explorer renders the annotated tree", async () => {
    const backend = mockBackend();
    const app = new ExplorerApp(
      mount(),
      new ApiClient("/v1", backend.fetch),
      { view: "gaps", domainRoot: "cousin", language: "eng" },
    );
    await app.update({});
    expect(document.body.querySelectorAll('.tree-node[data-status="gap"]').length).toBe(66);
  });
});
