/** Quiver draft for the editor: vertices with a frozen toggle and arrows,
 * with the input-time invariants enforced on every edit -- no loops, no
 * 2-cycles, no arrows between two frozen vertices. */

import type { QuiverJson } from "./api.js";

export interface DraftArrow {
  src: number; // draft vertex ids, 1-based in creation order
  tgt: number;
}

export class QuiverDraft {
  frozen: boolean[] = [];
  arrows: DraftArrow[] = [];

  addVertex(frozen = false): number {
    this.frozen.push(frozen);
    return this.frozen.length;
  }

  removeVertex(vertex: number): void {
    if (vertex < 1 || vertex > this.frozen.length) throw new Error("no such vertex");
    this.frozen.splice(vertex - 1, 1);
    this.arrows = this.arrows
      .filter((a) => a.src !== vertex && a.tgt !== vertex)
      .map((a) => ({
        src: a.src > vertex ? a.src - 1 : a.src,
        tgt: a.tgt > vertex ? a.tgt - 1 : a.tgt,
      }));
  }

  /** Error message when the toggle would create a frozen-frozen arrow. */
  toggleFrozen(vertex: number): string | null {
    const flipped = !this.frozen[vertex - 1];
    if (flipped) {
      for (const a of this.arrows) {
        const other = a.src === vertex ? a.tgt : a.tgt === vertex ? a.src : null;
        if (other !== null && this.frozen[other - 1]) {
          return `freezing vertex ${vertex} would leave an arrow between two frozen vertices`;
        }
      }
    }
    this.frozen[vertex - 1] = flipped;
    return null;
  }

  /** Error message when the arrow violates an invariant; null on success. */
  addArrow(src: number, tgt: number): string | null {
    const count = this.frozen.length;
    if (src < 1 || src > count || tgt < 1 || tgt > count) return "arrow endpoint out of range";
    if (src === tgt) return "loops are not allowed";
    if (this.arrows.some((a) => a.src === tgt && a.tgt === src)) {
      return `an arrow ${tgt}→${src} exists; a 2-cycle is not allowed`;
    }
    if (this.frozen[src - 1] && this.frozen[tgt - 1]) {
      return "arrows between two frozen vertices are not allowed";
    }
    this.arrows.push({ src, tgt });
    return null;
  }

  removeArrow(index: number): void {
    this.arrows.splice(index, 1);
  }

  issues(): string[] {
    const out: string[] = [];
    if (this.frozen.length === 0) out.push("add at least one vertex");
    if (this.frozen.every(Boolean) && this.frozen.length > 0) {
      out.push("every vertex is frozen; nothing can be mutated");
    }
    return out;
  }

  /** JSON quiver with mutable vertices first, plus display-order mapping:
   * displayOrder[jsonIndex] = draft vertex id. */
  toQuiverJson(): { quiver: QuiverJson; displayOrder: number[] } {
    const mutable: number[] = [];
    const frozen: number[] = [];
    this.frozen.forEach((isFrozen, idx) => {
      (isFrozen ? frozen : mutable).push(idx + 1);
    });
    const order = [...mutable, ...frozen];
    const position = new Map(order.map((v, idx) => [v, idx]));
    const m = order.length;
    const b: number[][] = Array.from({ length: m }, () => Array(m).fill(0));
    for (const arrow of this.arrows) {
      const i = position.get(arrow.src)!;
      const j = position.get(arrow.tgt)!;
      b[i][j] += 1;
      b[j][i] -= 1;
    }
    return {
      quiver: { v: 1, n: mutable.length, m, b },
      displayOrder: order,
    };
  }
}
