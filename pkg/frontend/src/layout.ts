/** Deterministic force-directed layout.
 *
 * Frozen vertices are pinned to the periphery circle; mutable vertices are
 * seeded on an inner ring by a PRNG derived from the matrix itself, then
 * relaxed with a fixed number of spring/repulsion iterations, so the same
 * quiver always draws the same picture.
 */

import type { QuiverJson } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

function hashQuiver(q: QuiverJson): number {
  const text = `${q.n};${q.m};${q.b.map((row) => row.join(",")).join("|")}`;
  let h = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 0x01000193);
  }
  return h >>> 0;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function layoutQuiver(
  q: QuiverJson,
  width = 520,
  height = 400,
  iterations = 120,
): Point[] {
  const cx = width / 2;
  const cy = height / 2;
  const outer = Math.min(width, height) / 2 - 28;
  const inner = outer * 0.55;
  const rand = mulberry32(hashQuiver(q));
  const points: Point[] = [];
  const frozenCount = q.m - q.n;
  let frozenIndex = 0;
  for (let i = 0; i < q.m; i++) {
    if (i >= q.n) {
      const angle = (2 * Math.PI * frozenIndex) / Math.max(1, frozenCount) - Math.PI / 2;
      points.push({ x: cx + outer * Math.cos(angle), y: cy + outer * Math.sin(angle) });
      frozenIndex++;
    } else {
      const angle = 2 * Math.PI * rand();
      const radius = inner * (0.4 + 0.6 * rand());
      points.push({ x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) });
    }
  }
  const edges: Array<[number, number]> = [];
  for (let i = 0; i < q.m; i++) {
    for (let j = i + 1; j < q.m; j++) {
      if (q.b[i][j] !== 0) edges.push([i, j]);
    }
  }
  const spring = 90;
  for (let step = 0; step < iterations; step++) {
    const force: Point[] = points.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < q.n; i++) {
      for (let j = 0; j < q.m; j++) {
        if (i === j) continue;
        const dx = points[i].x - points[j].x;
        const dy = points[i].y - points[j].y;
        const d2 = Math.max(25, dx * dx + dy * dy);
        const push = 2200 / d2;
        const d = Math.sqrt(d2);
        force[i].x += (dx / d) * push;
        force[i].y += (dy / d) * push;
      }
    }
    for (const [i, j] of edges) {
      const dx = points[j].x - points[i].x;
      const dy = points[j].y - points[i].y;
      const d = Math.max(5, Math.sqrt(dx * dx + dy * dy));
      const pull = (d - spring) * 0.02;
      if (i < q.n) {
        force[i].x += (dx / d) * pull;
        force[i].y += (dy / d) * pull;
      }
      if (j < q.n) {
        force[j].x -= (dx / d) * pull;
        force[j].y -= (dy / d) * pull;
      }
    }
    const cool = 1 - step / iterations;
    for (let i = 0; i < q.n; i++) {
      points[i].x += Math.max(-8, Math.min(8, force[i].x)) * cool;
      points[i].y += Math.max(-8, Math.min(8, force[i].y)) * cool;
      const dx = points[i].x - cx;
      const dy = points[i].y - cy;
      const d = Math.sqrt(dx * dx + dy * dy);
      if (d > inner) {
        points[i].x = cx + (dx / d) * inner;
        points[i].y = cy + (dy / d) * inner;
      }
    }
  }
  return points.map((p) => ({ x: Math.round(p.x * 100) / 100, y: Math.round(p.y * 100) / 100 }));
}
