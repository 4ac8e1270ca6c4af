import { describe, expect, it } from "vitest";

import { ApiError, SessionApi } from "../src/api.js";

function fetchReturning(status: number, body: unknown, seen: string[]): typeof fetch {
  return (async (input: string, init?: RequestInit) => {
    seen.push(`${init?.method ?? "GET"} ${input}`);
    return new Response(JSON.stringify(body), { status });
  }) as typeof fetch;
}

describe("SessionApi", () => {
  it("hits the documented endpoints", async () => {
    const seen: string[] = [];
    const api = new SessionApi(
      "http://h:1",
      fetchReturning(200, { v: 1, id: "a", seed: {}, neighbors: [] }, seen),
    );
    await api.create({ n: 1, m: 1, b: [[0]] }, "X");
    await api.get("a");
    await api.mutate("a", 1);
    await api.undo("a");
    await api.neighbors("a");
    expect(seen).toEqual([
      "POST http://h:1/session",
      "GET http://h:1/session/a",
      "POST http://h:1/session/a/mutate",
      "POST http://h:1/session/a/undo",
      "GET http://h:1/session/a/neighbors",
    ]);
  });

  it("maps structured errors to ApiError with status", async () => {
    const api = new SessionApi(
      "http://h:1",
      fetchReturning(409, { v: 1, error: "nothing to undo" }, []),
    );
    const failure = await api.undo("a").catch((e) => e);
    expect(failure).toBeInstanceOf(ApiError);
    expect((failure as ApiError).status).toBe(409);
    expect((failure as ApiError).message).toBe("nothing to undo");
  });
});
