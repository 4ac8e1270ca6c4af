/** DOM-level explorer tests against a scripted in-memory server.  The mock
 * returns distinctive strings so byte-equality between response fields and
 * rendered text is what is actually proved. */

import { beforeEach, describe, expect, it } from "vitest";

import { SessionApi, type QuiverJson, type SeedJson } from "../src/api.js";
import { Explorer } from "../src/explorer.js";

const QUIVER: QuiverJson = { v: 1, n: 2, m: 2, b: [[0, 1], [-1, 0]] };

const SEED_0: SeedJson = { v: 1, quiver: QUIVER, vars: ["x1", "x2"] };
const SEED_1: SeedJson = {
  v: 1,
  quiver: { v: 1, n: 2, m: 2, b: [[0, -1], [1, 0]] },
  vars: ["(1 + x2)/x1", "x2"],
};

interface Call {
  path: string;
  method: string;
}

function scriptedFetch(calls: Call[]): typeof fetch {
  const history: SeedJson[] = [SEED_0];
  return (async (input: string, init?: RequestInit) => {
    const method = init?.method ?? "GET";
    const path = String(input).replace(/^https?:\/\/[^/]+/, "");
    calls.push({ path, method });
    const reply = (status: number, body: unknown) =>
      new Response(JSON.stringify(body), { status });
    if (path === "/session" && method === "POST") {
      return reply(200, { v: 1, id: "s1", seed: SEED_0 });
    }
    if (path === "/session/s1/mutate" && method === "POST") {
      const { vertex } = JSON.parse(String(init?.body)) as { vertex: number };
      if (vertex === 2) return reply(400, { v: 1, error: "vertex 2 is rejected by the server" });
      const next = history.length % 2 === 1 ? SEED_1 : SEED_0;
      history.push(next);
      return reply(200, {
        v: 1,
        seed: next,
        exchange: { out: "x2", in: "1" },
      });
    }
    if (path === "/session/s1/undo" && method === "POST") {
      if (history.length === 1) return reply(409, { v: 1, error: "nothing to undo" });
      history.pop();
      return reply(200, { v: 1, seed: history[history.length - 1] });
    }
    if (path === "/session/s1" && method === "GET") {
      return reply(200, {
        v: 1,
        id: "s1",
        mode: "X",
        seed: history[history.length - 1],
        history: history.map((seed, idx) => ({ vertex: idx === 0 ? null : 1, seed })),
      });
    }
    return reply(404, { v: 1, error: "unknown" });
  }) as typeof fetch;
}

describe("Explorer", () => {
  let root: HTMLElement;
  let calls: Call[];
  let explorer: Explorer;

  beforeEach(async () => {
    document.body.innerHTML = "<div id='root'></div>";
    root = document.getElementById("root")!;
    calls = [];
    explorer = new Explorer(root, new SessionApi("http://test", scriptedFetch(calls)));
    await explorer.start(QUIVER, "X");
  });

  function panelTexts(): string[] {
    return Array.from(root.querySelectorAll("[data-testid='variables'] li")).map(
      (li) => li.textContent ?? "",
    );
  }

  it("renders the initial seed verbatim", () => {
    expect(panelTexts()).toEqual(SEED_0.vars);
  });

  it("click mutates and displays the response strings byte-for-byte", async () => {
    await explorer.clickVertex(1);
    expect(panelTexts()).toEqual(SEED_1.vars);
    const banner = root.querySelector("[data-testid='exchange-banner']");
    expect(banner?.textContent).toBe("u1′ · u1 = x2 + 1");
  });

  it("clicking twice returns to the initial panel", async () => {
    await explorer.clickVertex(1);
    await explorer.clickVertex(1);
    expect(panelTexts()).toEqual(SEED_0.vars);
  });

  it("undo returns to the previous seed and is disabled at the start", async () => {
    const undoButton = () =>
      root.querySelector("[data-testid='undo']") as HTMLButtonElement;
    expect(undoButton().disabled).toBe(true);
    await explorer.clickVertex(1);
    expect(undoButton().disabled).toBe(false);
    await explorer.undo();
    expect(panelTexts()).toEqual(SEED_0.vars);
    expect(undoButton().disabled).toBe(true);
  });

  it("history strip grows with mutations and jump replays to the start", async () => {
    await explorer.clickVertex(1);
    await explorer.clickVertex(1);
    await explorer.clickVertex(1);
    const stops = root.querySelectorAll(".history-stop");
    expect(stops).toHaveLength(4); // mutation count + 1
    await explorer.jumpTo(0);
    expect(panelTexts()).toEqual(SEED_0.vars);
    expect(root.querySelectorAll(".history-stop")).toHaveLength(1);
  });

  it("frozen clicks show a non-blocking notice without a request", async () => {
    const iceQuiver: QuiverJson = { v: 1, n: 1, m: 2, b: [[0, 1], [-1, 0]] };
    const iceSeed: SeedJson = { v: 1, quiver: iceQuiver, vars: ["x1", "x2"] };
    const fetchImpl = (async () =>
      new Response(JSON.stringify({ v: 1, id: "s1", seed: iceSeed }), {
        status: 200,
      })) as typeof fetch;
    const iceExplorer = new Explorer(root, new SessionApi("http://test", fetchImpl));
    await iceExplorer.start(iceQuiver, "X");
    await iceExplorer.clickVertex(2);
    const notice = root.querySelector("[data-testid='notice']");
    expect(notice?.textContent).toMatch(/frozen/);
    expect(panelTexts()).toEqual(iceSeed.vars); // view unchanged
  });

  it("server errors surface as notices", async () => {
    // The scripted server rejects vertex 2 even though the client sees it
    // as mutable, standing in for any server-side 4xx.
    await explorer.clickVertex(2);
    const notice = root.querySelector("[data-testid='notice']");
    expect(notice?.textContent).toMatch(/rejected by the server/);
    expect(panelTexts()).toEqual(SEED_0.vars);
  });

  it("keeps a single request in flight", async () => {
    const first = explorer.clickVertex(1);
    const second = explorer.clickVertex(1); // ignored while busy
    await Promise.all([first, second]);
    const mutateCalls = calls.filter((c) => c.path.endsWith("/mutate"));
    expect(mutateCalls).toHaveLength(1);
  });
});
