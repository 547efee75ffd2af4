/** Interaction state machine: user actions mutate the state, the state
 * drives fetches, responses drive renders. The UI computes nothing
 * itself: every number and color derives from an API response. A failed
 * backend produces a visible error banner, never a silent blank. */

import { ApiClient, ApiError } from "./api.js";
import { type AppState, DEFAULT_STATE, stateFromQuery, syncUrl } from "./state.js";
import { renderConceptExplorer } from "./views/conceptExplorer.js";
import { renderGapExplorer } from "./views/gapExplorer.js";
import { renderSimilarityGraph } from "./views/similarityGraph.js";
import { renderWorldMap } from "./views/worldMap.js";

export interface AppOptions {
  syncToUrl?: boolean;
  layoutIterations?: number;
  minOverlap?: number;
}

export class ExplorerApp {
  readonly state: AppState;
  private readonly api: ApiClient;
  private readonly root: HTMLElement;
  private readonly options: AppOptions;
  private pending: Promise<void> = Promise.resolve();

  constructor(root: HTMLElement, api: ApiClient, initial?: Partial<AppState>,
              options: AppOptions = {}) {
    this.root = root;
    this.api = api;
    this.options = options;
    this.state = { ...DEFAULT_STATE, ...initial };
  }

  static fromLocation(root: HTMLElement, api: ApiClient): ExplorerApp {
    return new ExplorerApp(root, api, stateFromQuery(window.location.search),
                           { syncToUrl: true });
  }

  /** Resolves once every in-flight state change has rendered; event
   * handlers fire updates without awaiting them, so scripted tests (and
   * anything else driving the UI programmatically) wait here. */
  async settle(): Promise<void> {
    let last;
    do {
      last = this.pending;
      await last;
    } while (last !== this.pending);
  }

  update(patch: Partial<AppState>): Promise<void> {
    Object.assign(this.state, patch);
    if (this.options.syncToUrl) {
      syncUrl(this.state);
    }
    this.pending = this.pending.then(() => this.render());
    return this.pending;
  }

  async setLanguage(code: string): Promise<void> {
    // language changes re-annotate the current screen; focus is kept
    await this.update({ language: code });
  }

  async focusConcept(id: string): Promise<void> {
    await this.update({ view: "concept", concept: id });
  }

  async render(): Promise<void> {
    try {
      switch (this.state.view) {
        case "concept":
          await this.renderConcept();
          break;
        case "gaps":
          await this.renderGaps();
          break;
        case "similarity":
          await this.renderSimilarity();
          break;
        default:
          await this.renderMap();
      }
    } catch (error) {
      this.renderError(error);
    }
  }

  private async renderMap(): Promise<void> {
    const page = await this.api.languages();
    const concept = this.state.concept;
    if (concept) {
      const [lexicalisations, clusters] = await Promise.all([
        this.api.lexicalisations(concept),
        this.api.clusters(concept),
      ]);
      renderWorldMap(this.root, { languages: page.items, lexicalisations, clusters },
                     { onLanguageClick: (code) => void this.setLanguage(code) });
    } else {
      renderWorldMap(this.root, { languages: page.items },
                     { onLanguageClick: (code) => void this.setLanguage(code) });
    }
  }

  private async renderConcept(): Promise<void> {
    const conceptId = this.state.concept;
    if (!conceptId) {
      await this.renderMap();
      return;
    }
    const language = this.state.language;
    const [concept, page, lexicalisations, clusters, neighborhood] = await Promise.all([
      this.api.concept(conceptId),
      this.api.languages(),
      this.api.lexicalisations(conceptId),
      this.api.clusters(conceptId),
      this.api.neighborhood(conceptId, language),
    ]);
    const lemmas = lexicalisations.languages[language]?.lemmas ?? [];
    const words = await Promise.all(lemmas.map((lemma) => this.api.word(language, lemma)));
    renderConceptExplorer(this.root, {
      concept, language, languages: page.items,
      lexicalisations, clusters, neighborhood, words,
    }, {
      onLanguageClick: (code) => void this.setLanguage(code),
      onConceptClick: (id) => void this.focusConcept(id),
    });
  }

  private async renderGaps(): Promise<void> {
    const root = this.state.domainRoot;
    if (!root) {
      this.renderError(new ApiError(0, "no-domain", "pick a domain root first"));
      return;
    }
    const [tree, page] = await Promise.all([
      this.api.domainTree(root, this.state.language),
      this.api.languages(),
    ]);
    renderGapExplorer(this.root, { tree, languages: page.items }, {
      onLanguageChange: (code) => void this.setLanguage(code),
      onConceptClick: (id) => void this.focusConcept(id),
    });
  }

  private async renderSimilarity(): Promise<void> {
    const [layoutResult, page] = await Promise.all([
      this.api.layout(this.state.threshold, this.state.seed,
                      this.options.layoutIterations ?? 100, this.options.minOverlap),
      this.api.languages(),
    ]);
    renderSimilarityGraph(this.root, {
      layout: layoutResult,
      languages: page.items,
      coloring: this.state.coloring,
    }, {
      onColoringToggle: (coloring) => void this.update({ coloring }),
      onLanguageClick: (code) => void this.setLanguage(code),
    });
  }

  private renderError(error: unknown): void {
    this.root.textContent = "";
    const banner = document.createElement("div");
    banner.className = "error-banner";
    banner.setAttribute("role", "alert");
    const title = document.createElement("strong");
    title.textContent = error instanceof ApiError && error.code === "unreachable"
      ? "backend unreachable"
      : "request failed";
    banner.appendChild(title);
    const detail = document.createElement("p");
    detail.textContent = error instanceof Error ? error.message : String(error);
    banner.appendChild(detail);
    this.root.appendChild(banner);
  }
}
