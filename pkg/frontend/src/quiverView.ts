/** SVG rendering of an ice quiver: frozen vertices boxed, arrow
 * multiplicities drawn as parallel edges up to 3, labeled with the count
 * beyond that.  The picture is rebuilt from the server's b-matrix verbatim;
 * nothing is derived client-side. */

import type { QuiverJson } from "./api.js";
import { layoutQuiver, type Point } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface QuiverViewOptions {
  onVertexClick?: (vertex: number) => void;
  flippedVertex?: number | null; // vertex whose incident arrows just reversed
  width?: number;
  height?: number;
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, value);
  return el;
}

function arrowPath(a: Point, b: Point, offset: number): string {
  const mx = (a.x + b.x) / 2;
  const my = (a.y + b.y) / 2;
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const d = Math.max(1, Math.sqrt(dx * dx + dy * dy));
  const nx = (-dy / d) * offset;
  const ny = (dx / d) * offset;
  return `M ${a.x} ${a.y} Q ${mx + nx} ${my + ny} ${b.x} ${b.y}`;
}

export function renderQuiver(q: QuiverJson, options: QuiverViewOptions = {}): SVGSVGElement {
  const width = options.width ?? 520;
  const height = options.height ?? 400;
  const points = layoutQuiver(q, width, height);
  const svg = svgEl("svg", {
    viewBox: `0 0 ${width} ${height}`,
    width: String(width),
    height: String(height),
    class: "quiver",
  });
  const defs = svgEl("defs", {});
  const marker = svgEl("marker", {
    id: "arrowhead",
    markerWidth: "7",
    markerHeight: "7",
    refX: "14",
    refY: "3.5",
    orient: "auto",
  });
  marker.appendChild(svgEl("polygon", { points: "0 0, 7 3.5, 0 7", fill: "#444" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  for (let i = 0; i < q.m; i++) {
    for (let j = 0; j < q.m; j++) {
      const mult = q.b[i][j];
      if (mult <= 0) continue;
      const drawn = Math.min(mult, 3);
      for (let k = 0; k < drawn; k++) {
        const offset = (k - (drawn - 1) / 2) * 14;
        const path = svgEl("path", {
          d: arrowPath(points[i], points[j], offset),
          fill: "none",
          stroke: "#444",
          "stroke-width": "1.6",
          "marker-end": "url(#arrowhead)",
          class:
            options.flippedVertex != null &&
            (i === options.flippedVertex - 1 || j === options.flippedVertex - 1)
              ? "edge flip"
              : "edge",
          "data-edge": `${i + 1}>${j + 1}`,
        });
        svg.appendChild(path);
      }
      if (mult > 3) {
        const label = svgEl("text", {
          x: String((points[i].x + points[j].x) / 2),
          y: String((points[i].y + points[j].y) / 2 - 10),
          class: "edge-count",
          "text-anchor": "middle",
        });
        label.textContent = `×${mult}`;
        svg.appendChild(label);
      }
    }
  }

  for (let i = 0; i < q.m; i++) {
    const frozen = i >= q.n;
    const group = svgEl("g", {
      class: frozen ? "vertex frozen" : "vertex mutable",
      "data-vertex": String(i + 1),
    });
    const p = points[i];
    if (frozen) {
      group.appendChild(
        svgEl("rect", {
          x: String(p.x - 14),
          y: String(p.y - 12),
          width: "28",
          height: "24",
          rx: "3",
          class: "vertex-shape",
        }),
      );
    } else {
      group.appendChild(
        svgEl("circle", { cx: String(p.x), cy: String(p.y), r: "14", class: "vertex-shape" }),
      );
    }
    const label = svgEl("text", {
      x: String(p.x),
      y: String(p.y + 4),
      "text-anchor": "middle",
      class: "vertex-label",
    });
    label.textContent = String(i + 1);
    group.appendChild(label);
    if (options.onVertexClick) {
      group.addEventListener("click", () => options.onVertexClick!(i + 1));
    }
    svg.appendChild(group);
  }
  return svg;
}
