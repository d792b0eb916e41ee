/**
 * Backend-neutral drawing primitives.
 *
 * The chart layout emits a flat list of these; the PNG rasterizer and
 * the SVG writer consume the same list, so the two outputs always show
 * the same chart.
 */

export type TextAnchor = "start" | "middle" | "end";

export interface LineOp {
  op: "line";
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  color: string;
  dashed?: boolean;
  thick?: boolean;
}

export interface PolylineOp {
  op: "polyline";
  points: { x: number; y: number }[];
  color: string;
  dashed?: boolean;
  thick?: boolean;
}

export interface TextOp {
  op: "text";
  x: number;
  y: number; // baseline
  text: string;
  color: string;
  anchor: TextAnchor;
}

export type DrawOp = LineOp | PolylineOp | TextOp;

export function parseColor(color: string): [number, number, number] {
  const m = /^#([0-9a-f]{6})$/i.exec(color);
  if (!m) {
    throw new Error(`unsupported color ${color}`);
  }
  const v = parseInt(m[1], 16);
  return [(v >> 16) & 0xff, (v >> 8) & 0xff, v & 0xff];
}
