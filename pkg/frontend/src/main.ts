/** Page wiring: quiver editor on the left, explorer on the right. */

import { SessionApi, type QuiverJson } from "./api.js";
import { QuiverDraft } from "./editor.js";
import { Explorer } from "./explorer.js";

const DEFAULT_BASE = "http://127.0.0.1:8777";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text) node.textContent = text;
  return node;
}

export function mountApp(root: HTMLElement, baseUrl = DEFAULT_BASE): void {
  const api = new SessionApi(baseUrl);
  const editorPane = el("div", { class: "editor-pane" });
  const explorerPane = el("div", { class: "explorer-pane" });
  root.appendChild(editorPane);
  root.appendChild(explorerPane);

  const explorer = new Explorer(explorerPane, api);
  const draft = new QuiverDraft();

  const issueBox = el("div", { class: "issues", "data-testid": "editor-issues" });
  const arrowList = el("ul", { class: "arrow-list" });
  const vertexList = el("ul", { class: "vertex-list" });

  function refresh(): void {
    vertexList.textContent = "";
    draft.frozen.forEach((isFrozen, idx) => {
      const item = el("li", {}, `${idx + 1}${isFrozen ? " (frozen)" : ""}`);
      const toggle = el("button", {}, isFrozen ? "thaw" : "freeze");
      toggle.addEventListener("click", () => {
        const problem = draft.toggleFrozen(idx + 1);
        issueBox.textContent = problem ?? "";
        refresh();
      });
      item.appendChild(toggle);
      vertexList.appendChild(item);
    });
    arrowList.textContent = "";
    draft.arrows.forEach((arrow, idx) => {
      const item = el("li", {}, `${arrow.src} → ${arrow.tgt}`);
      const drop = el("button", {}, "remove");
      drop.addEventListener("click", () => {
        draft.removeArrow(idx);
        refresh();
      });
      item.appendChild(drop);
      arrowList.appendChild(item);
    });
  }

  const addVertexButton = el("button", { "data-testid": "add-vertex" }, "add vertex");
  addVertexButton.addEventListener("click", () => {
    draft.addVertex();
    refresh();
  });

  const srcInput = el("input", { type: "number", min: "1", placeholder: "from" });
  const tgtInput = el("input", { type: "number", min: "1", placeholder: "to" });
  const addArrowButton = el("button", { "data-testid": "add-arrow" }, "add arrow");
  addArrowButton.addEventListener("click", () => {
    const problem = draft.addArrow(Number(srcInput.value), Number(tgtInput.value));
    issueBox.textContent = problem ?? "";
    refresh();
  });

  const modeSelect = el("select", { "data-testid": "mode" });
  modeSelect.appendChild(el("option", { value: "X" }, "seeds (X)"));
  modeSelect.appendChild(el("option", { value: "Y" }, "Y-seeds"));

  const confirmButton = el("button", { "data-testid": "confirm" }, "start session");
  confirmButton.addEventListener("click", () => {
    const issues = draft.issues();
    if (issues.length) {
      issueBox.textContent = issues.join("; ");
      return;
    }
    const { quiver } = draft.toQuiverJson();
    void explorer
      .start(quiver, modeSelect.value as "X" | "Y")
      .catch((error) => (issueBox.textContent = String(error)));
  });

  const quickA2 = el("button", { "data-testid": "quick-a2" }, "A2 quick start");
  quickA2.addEventListener("click", () => {
    const quiver: QuiverJson = { v: 1, n: 2, m: 2, b: [[0, 1], [-1, 0]] };
    void explorer
      .start(quiver, modeSelect.value as "X" | "Y")
      .catch((error) => (issueBox.textContent = String(error)));
  });

  const importArea = el("textarea", {
    "data-testid": "import-input",
    placeholder: "paste an exported session record",
  });
  const importButton = el("button", { "data-testid": "import" }, "import session");
  importButton.addEventListener("click", () => {
    try {
      const record = JSON.parse((importArea as HTMLTextAreaElement).value);
      void explorer
        .importSession(record)
        .catch((error) => (issueBox.textContent = String(error)));
    } catch (error) {
      issueBox.textContent = `import failed: ${error}`;
    }
  });

  editorPane.append(
    el("h2", {}, "quiver editor"),
    addVertexButton,
    vertexList,
    srcInput,
    tgtInput,
    addArrowButton,
    arrowList,
    modeSelect,
    confirmButton,
    quickA2,
    importArea,
    importButton,
    issueBox,
  );
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  const params = new URLSearchParams(window.location.search);
  mountApp(document.getElementById("app")!, params.get("api") ?? DEFAULT_BASE);
}
