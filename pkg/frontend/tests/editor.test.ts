import { describe, expect, it } from "vitest";

import { QuiverDraft } from "../src/editor.js";

describe("QuiverDraft invariants", () => {
  it("rejects loops at input time", () => {
    const draft = new QuiverDraft();
    draft.addVertex();
    expect(draft.addArrow(1, 1)).toMatch(/loop/);
    expect(draft.arrows).toHaveLength(0);
  });

  it("rejects 2-cycles at input time", () => {
    const draft = new QuiverDraft();
    draft.addVertex();
    draft.addVertex();
    expect(draft.addArrow(1, 2)).toBeNull();
    expect(draft.addArrow(2, 1)).toMatch(/2-cycle/);
    expect(draft.arrows).toHaveLength(1);
  });

  it("rejects frozen-frozen arrows and freezes that would create them", () => {
    const draft = new QuiverDraft();
    draft.addVertex(true);
    draft.addVertex(true);
    expect(draft.addArrow(1, 2)).toMatch(/frozen/);
    const open = new QuiverDraft();
    open.addVertex();
    open.addVertex(true);
    expect(open.addArrow(1, 2)).toBeNull();
    expect(open.toggleFrozen(1)).toMatch(/frozen/);
    expect(open.frozen[0]).toBe(false);
  });

  it("puts frozen vertices last in the JSON quiver", () => {
    const draft = new QuiverDraft();
    draft.addVertex(true); // draft vertex 1, frozen
    draft.addVertex(); // 2
    draft.addVertex(); // 3
    expect(draft.addArrow(2, 3)).toBeNull();
    expect(draft.addArrow(1, 2)).toBeNull();
    const { quiver, displayOrder } = draft.toQuiverJson();
    expect(quiver.n).toBe(2);
    expect(quiver.m).toBe(3);
    expect(displayOrder).toEqual([2, 3, 1]);
    // arrow 2->3 maps to json 1->2; arrow 1->2 maps to json 3->1
    expect(quiver.b[0][1]).toBe(1);
    expect(quiver.b[2][0]).toBe(1);
  });

  it("builds the path quiver 1->2->3 verbatim", () => {
    const draft = new QuiverDraft();
    draft.addVertex();
    draft.addVertex();
    draft.addVertex();
    draft.addArrow(1, 2);
    draft.addArrow(2, 3);
    const { quiver } = draft.toQuiverJson();
    expect(quiver).toEqual({
      v: 1,
      n: 3,
      m: 3,
      b: [
        [0, 1, 0],
        [-1, 0, 1],
        [0, -1, 0],
      ],
    });
  });

  it("flags an all-frozen draft", () => {
    const draft = new QuiverDraft();
    draft.addVertex(true);
    expect(draft.issues().join(" ")).toMatch(/frozen/);
  });

  it("removes vertices and renumbers arrows", () => {
    const draft = new QuiverDraft();
    draft.addVertex();
    draft.addVertex();
    draft.addVertex();
    draft.addArrow(2, 3);
    draft.removeVertex(1);
    expect(draft.frozen).toHaveLength(2);
    expect(draft.arrows).toEqual([{ src: 1, tgt: 2 }]);
  });
});
