/** Typed client for the /v1 API with per-URL in-flight deduplication:
 * concurrent requests for the same endpoint+params share one fetch. */

import type {
  Clusters,
  Concept,
  DomainTree,
  LanguagePage,
  LayoutResult,
  Lexicalisations,
  Neighborhood,
  WordLookup,
} from "./types.js";

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.code = code;
    this.status = status;
  }
}

type FetchLike = (url: string) => Promise<Response>;

export class ApiClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;
  private readonly inFlight = new Map<string, Promise<unknown>>();

  constructor(base = "/v1", fetchFn?: FetchLike) {
    this.base = base.replace(/\/$/, "");
    this.fetchFn = fetchFn ?? ((url) => fetch(url));
  }

  private async get<T>(path: string, params?: Record<string, string | number>): Promise<T> {
    let url = this.base + path;
    if (params && Object.keys(params).length > 0) {
      const query = new URLSearchParams();
      for (const key of Object.keys(params).sort()) {
        query.set(key, String(params[key]));
      }
      url += "?" + query.toString();
    }
    const pending = this.inFlight.get(url);
    if (pending) {
      return pending as Promise<T>;
    }
    const request = this.request<T>(url).finally(() => this.inFlight.delete(url));
    this.inFlight.set(url, request);
    return request;
  }

  private async request<T>(url: string): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(url);
    } catch (cause) {
      throw new ApiError(0, "unreachable", `backend unreachable: ${String(cause)}`);
    }
    if (!response.ok) {
      let code = "error";
      let message = `HTTP ${response.status}`;
      try {
        const body = (await response.json()) as { error?: { code: string; message: string } };
        if (body.error) {
          code = body.error.code;
          message = body.error.message;
        }
      } catch {
        // non-JSON error body; keep the HTTP status message
      }
      throw new ApiError(response.status, code, message);
    }
    return (await response.json()) as T;
  }

  languages(): Promise<LanguagePage> {
    return this.get("/languages");
  }

  concept(id: string): Promise<Concept> {
    return this.get(`/concepts/${encodeURIComponent(id)}`);
  }

  lexicalisations(id: string): Promise<Lexicalisations> {
    return this.get(`/concepts/${encodeURIComponent(id)}/lexicalisations`);
  }

  clusters(id: string): Promise<Clusters> {
    return this.get(`/concepts/${encodeURIComponent(id)}/clusters`);
  }

  neighborhood(id: string, language: string, depth = 1): Promise<Neighborhood> {
    return this.get(`/concepts/${encodeURIComponent(id)}/neighborhood`, {
      lang: language,
      depth,
    });
  }

  word(language: string, lemma: string): Promise<WordLookup> {
    return this.get(
      `/languages/${encodeURIComponent(language)}/words/${encodeURIComponent(lemma)}`,
    );
  }

  domainTree(root: string, language: string): Promise<DomainTree> {
    return this.get(`/domains/${encodeURIComponent(root)}/tree`, { lang: language });
  }

  layout(threshold: number, seed: number, iterations: number,
         minOverlap?: number): Promise<LayoutResult> {
    const params: Record<string, string | number> = { threshold, seed, iterations };
    if (minOverlap !== undefined) {
      params.min_overlap = minOverlap;
    }
    return this.get("/similarity/layout", params);
  }
}
