/**
 * SVG writer for the chart primitives.
 *
 * Numbers are formatted with one decimal place and no timestamps or ids
 * are embedded, so output is deterministic for a given primitive list.
 */

import { DrawOp } from "./primitives.js";

const f = (v: number): string => v.toFixed(1);

function escapeText(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function toSvg(width: number, height: number, ops: DrawOp[]): string {
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    `<rect width="${width}" height="${height}" fill="#ffffff"/>`,
  ];
  for (const op of ops) {
    if (op.op === "line") {
      parts.push(
        `<line x1="${f(op.x1)}" y1="${f(op.y1)}" x2="${f(op.x2)}" y2="${f(op.y2)}"` +
          ` stroke="${op.color}" stroke-width="${op.thick ? 2 : 1}"` +
          (op.dashed ? ` stroke-dasharray="5 3"` : "") +
          `/>`,
      );
    } else if (op.op === "polyline") {
      const pts = op.points.map((p) => `${f(p.x)},${f(p.y)}`).join(" ");
      parts.push(
        `<polyline points="${pts}" fill="none" stroke="${op.color}"` +
          ` stroke-width="${op.thick ? 2 : 1}"` +
          (op.dashed ? ` stroke-dasharray="5 3"` : "") +
          `/>`,
      );
    } else {
      parts.push(
        `<text x="${f(op.x)}" y="${f(op.y)}" fill="${op.color}"` +
          ` font-family="monospace" font-size="11" text-anchor="${op.anchor}">` +
          `${escapeText(op.text)}</text>`,
      );
    }
  }
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
