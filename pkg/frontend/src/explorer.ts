/** The explorer view: a quiver picture you click to mutate, a variable
 * panel, the exchange-relation banner, and a clickable history strip.
 *
 * Every displayed string is byte-equal to a field of the last server
 * response; the client performs no algebra.  A single request is active at
 * a time: controls are disabled while one is in flight.
 */

import {
  ApiError,
  SessionApi,
  type QuiverJson,
  type SeedJson,
  type SessionRecord,
} from "./api.js";
import { renderQuiver } from "./quiverView.js";

export interface ViewState {
  sessionId: string;
  mode: "X" | "Y";
  seed: SeedJson;
  historyLength: number;
  banner: string | null;
  notice: string | null;
}

export class Explorer {
  state: ViewState | null = null;
  private busy = false;
  private flippedVertex: number | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: SessionApi,
  ) {}

  async start(quiver: QuiverJson, mode: "X" | "Y"): Promise<void> {
    const created = await this.api.create(quiver, mode);
    this.state = {
      sessionId: created.id,
      mode,
      seed: created.seed,
      historyLength: 1,
      banner: null,
      notice: null,
    };
    this.render();
  }

  /** POST a mutation for a mutable vertex; frozen clicks only show a notice. */
  async clickVertex(vertex: number): Promise<void> {
    if (!this.state || this.busy) return;
    if (vertex > this.state.seed.quiver.n) {
      this.state.notice = `vertex ${vertex} is frozen; coefficients are permanent`;
      this.render();
      return;
    }
    this.busy = true;
    this.render();
    try {
      const response = await this.api.mutate(this.state.sessionId, vertex);
      this.state.seed = response.seed;
      this.state.historyLength += 1;
      this.state.notice = null;
      this.state.banner = response.exchange
        ? `u${vertex}′ · u${vertex} = ${response.exchange.out} + ${response.exchange.in}`
        : null;
      this.flippedVertex = vertex;
    } catch (error) {
      this.state.banner = null;
      this.state.notice = error instanceof ApiError ? error.message : String(error);
    } finally {
      this.busy = false;
      this.render();
      this.flippedVertex = null;
    }
  }

  async undo(): Promise<void> {
    if (!this.state || this.busy || this.state.historyLength <= 1) return;
    this.busy = true;
    this.render();
    try {
      const response = await this.api.undo(this.state.sessionId);
      this.state.seed = response.seed;
      this.state.historyLength -= 1;
      this.state.banner = null;
      this.state.notice = null;
    } catch (error) {
      this.state.notice = error instanceof ApiError ? error.message : String(error);
    } finally {
      this.busy = false;
      this.render();
    }
  }

  /** Server-side replay to an earlier history entry by undoing past it. */
  async jumpTo(index: number): Promise<void> {
    if (!this.state || this.busy || index < 0 || index >= this.state.historyLength - 1) {
      return;
    }
    this.busy = true;
    this.render();
    try {
      while (this.state.historyLength - 1 > index) {
        const response = await this.api.undo(this.state.sessionId);
        this.state.seed = response.seed;
        this.state.historyLength -= 1;
      }
      this.state.banner = null;
      this.state.notice = null;
    } catch (error) {
      this.state.notice = error instanceof ApiError ? error.message : String(error);
    } finally {
      this.busy = false;
      this.render();
    }
  }

  /** The documented session record, for export and CLI replay. */
  async exportSession(): Promise<SessionRecord> {
    if (!this.state) throw new Error("no live session");
    return this.api.get(this.state.sessionId);
  }

  /** Recreate a session from an exported record: a fresh session on the
   * initial quiver whose recorded mutations are replayed server-side. */
  async importSession(record: SessionRecord): Promise<void> {
    if (!record.history?.length) throw new Error("record has no history");
    await this.start(record.history[0].seed.quiver, record.mode);
    for (const entry of record.history.slice(1)) {
      if (entry.vertex != null) {
        await this.clickVertex(entry.vertex);
      }
    }
  }

  render(): void {
    const root = this.root;
    root.textContent = "";
    if (!this.state) return;
    const { seed, mode } = this.state;

    const picture = document.createElement("div");
    picture.className = "picture";
    picture.appendChild(
      renderQuiver(seed.quiver, {
        onVertexClick: (v) => void this.clickVertex(v),
        flippedVertex: this.flippedVertex,
      }),
    );
    root.appendChild(picture);

    if (this.state.banner) {
      const banner = document.createElement("div");
      banner.className = "banner";
      banner.dataset.testid = "exchange-banner";
      banner.textContent = this.state.banner;
      root.appendChild(banner);
    }
    if (this.state.notice) {
      const notice = document.createElement("div");
      notice.className = "notice";
      notice.dataset.testid = "notice";
      notice.textContent = this.state.notice;
      root.appendChild(notice);
    }

    const panel = document.createElement("ol");
    panel.className = "variables";
    panel.dataset.testid = "variables";
    seed.vars.forEach((text, idx) => {
      const item = document.createElement("li");
      item.dataset.vertex = String(idx + 1);
      item.className = idx < seed.quiver.n ? "mutable" : "frozen";
      item.textContent = text; // verbatim server string
      panel.appendChild(item);
    });
    root.appendChild(panel);

    const controls = document.createElement("div");
    controls.className = "controls";
    const undoButton = document.createElement("button");
    undoButton.dataset.testid = "undo";
    undoButton.textContent = "undo";
    undoButton.disabled = this.busy || this.state.historyLength <= 1;
    undoButton.addEventListener("click", () => void this.undo());
    controls.appendChild(undoButton);

    const exportButton = document.createElement("button");
    exportButton.dataset.testid = "export";
    exportButton.textContent = "export";
    exportButton.disabled = this.busy;
    exportButton.addEventListener("click", () => {
      void this.exportSession().then((record) => {
        const blob = JSON.stringify(record, null, 2);
        const area = document.createElement("textarea");
        area.dataset.testid = "export-output";
        area.value = blob;
        root.appendChild(area);
      });
    });
    controls.appendChild(exportButton);

    const modeTag = document.createElement("span");
    modeTag.className = "mode";
    modeTag.textContent = mode === "X" ? "seed mode" : "Y-seed mode";
    controls.appendChild(modeTag);
    root.appendChild(controls);

    const strip = document.createElement("div");
    strip.className = "history";
    strip.dataset.testid = "history";
    for (let i = 0; i < this.state.historyLength; i++) {
      const stop = document.createElement("button");
      stop.className = "history-stop";
      stop.textContent = String(i);
      stop.disabled = this.busy || i === this.state.historyLength - 1;
      stop.addEventListener("click", () => void this.jumpTo(i));
      strip.appendChild(stop);
    }
    root.appendChild(strip);
  }
}
