import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { stateFromQuery, stateToQuery } from "../src/state.js";
import { mockBackend } from "./mockFetch.js";

describe("api client", () => {
  it("deduplicates concurrent requests for the same endpoint and params", async () => {
    const backend = mockBackend();
    const api = new ApiClient("/v1", backend.fetch);
    const [a, b, c] = await Promise.all([
      api.lexicalisations("fish"),
      api.lexicalisations("fish"),
      api.lexicalisations("rice-general"),
    ]);
    expect(a).toEqual(b);
    expect(c.concept).toBe("rice-general");
    const fishRequests = backend.requests.filter((url) => url.includes("fish"));
    expect(fishRequests.length).toBe(1);
  });

  it("fetches again once the first request has settled", async () => {
    const backend = mockBackend();
    const api = new ApiClient("/v1", backend.fetch);
    await api.languages();
    await api.languages();
    expect(backend.requests.length).toBe(2);
  });

  it("orders query parameters canonically", async () => {
    const backend = mockBackend();
    const api = new ApiClient("/v1", backend.fetch);
    await api.layout(0.5, 7, 100);
    expect(backend.requests[0]).toContain("iterations=100&seed=7&threshold=0.5");
  });

  it("raises the error envelope's code", async () => {
    const backend = mockBackend();
    const api = new ApiClient("/v1", backend.fetch);
    await expect(api.concept("no-such")).rejects.toMatchObject({
      code: "unknown-concept",
      status: 404,
    });
  });

  it("maps network failure to an unreachable error", async () => {
    const api = new ApiClient("/v1", () => Promise.reject(new TypeError("refused")));
    await expect(api.languages()).rejects.toBeInstanceOf(ApiError);
    await expect(api.languages()).rejects.toMatchObject({ code: "unreachable" });
  });
});

describe("url state", () => {
  it("round-trips through the query string", () => {
    const query = stateToQuery({
      view: "concept", language: "swa", concept: "rice-general",
      domainRoot: "cousin", threshold: 0.5, seed: 7, coloring: "geography",
    });
    const state = stateFromQuery("?" + query);
    expect(state).toEqual({
      view: "concept", language: "swa", concept: "rice-general",
      domainRoot: "cousin", threshold: 0.5, seed: 7, coloring: "geography",
    });
  });

  it("falls back to defaults for garbage", () => {
    const state = stateFromQuery("?view=bogus&threshold=abc");
    expect(state.view).toBe("map");
    expect(state.threshold).toBe(0);
    expect(state.language).toBe("eng");
  });
});
