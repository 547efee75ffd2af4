/** URL-addressable interaction state: every exploration screen is
 * shareable as a link and the back/forward buttons work. */

export type ViewName = "map" | "concept" | "gaps" | "similarity";

export interface AppState {
  view: ViewName;
  language: string;
  concept: string | null;
  domainRoot: string | null;
  threshold: number;
  seed: number;
  coloring: "family" | "geography";
}

export const DEFAULT_STATE: AppState = {
  view: "map",
  language: "eng",
  concept: null,
  domainRoot: null,
  threshold: 0.0,
  seed: 0,
  coloring: "family",
};

const VIEWS: ViewName[] = ["map", "concept", "gaps", "similarity"];

export function stateFromQuery(query: string): AppState {
  const params = new URLSearchParams(query);
  const view = params.get("view");
  const threshold = Number(params.get("threshold"));
  const seed = Number(params.get("seed"));
  return {
    view: VIEWS.includes(view as ViewName) ? (view as ViewName) : DEFAULT_STATE.view,
    language: params.get("lang") ?? DEFAULT_STATE.language,
    concept: params.get("concept"),
    domainRoot: params.get("domain"),
    threshold: Number.isFinite(threshold) && params.has("threshold")
      ? threshold : DEFAULT_STATE.threshold,
    seed: Number.isInteger(seed) && params.has("seed") ? seed : DEFAULT_STATE.seed,
    coloring: params.get("coloring") === "geography" ? "geography" : "family",
  };
}

export function stateToQuery(state: AppState): string {
  const params = new URLSearchParams();
  params.set("view", state.view);
  params.set("lang", state.language);
  if (state.concept) params.set("concept", state.concept);
  if (state.domainRoot) params.set("domain", state.domainRoot);
  if (state.threshold !== DEFAULT_STATE.threshold) params.set("threshold", String(state.threshold));
  if (state.seed !== DEFAULT_STATE.seed) params.set("seed", String(state.seed));
  if (state.coloring !== "family") params.set("coloring", state.coloring);
  return params.toString();
}

export function syncUrl(state: AppState): void {
  const query = stateToQuery(state);
  window.history.replaceState(null, "", `${window.location.pathname}?${query}`);
}
